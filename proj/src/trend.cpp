#include "tasig/trend.hpp"

#include <algorithm>

#include "tasig/errors.hpp"

namespace tasig {

TrendLine linear_trend(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n < 2)
        throw ValidationError("report: linear trend needs at least 2 points");

    double mean_x = (n - 1) / 2.0; // indices 0..n-1
    double mean_y = 0.0;
    for (double v : values)
        mean_y += v;
    mean_y /= double(n);

    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double dx = double(i) - mean_x;
        sxx += dx * dx;
        sxy += dx * (values[i] - mean_y);
    }

    TrendLine line;
    line.slope = sxy / sxx;
    line.intercept = mean_y - line.slope * mean_x;

    double ss_tot = 0.0;
    double ss_res = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double fit = line.intercept + line.slope * double(i);
        double dy = values[i] - mean_y;
        double res = values[i] - fit;
        ss_tot += dy * dy;
        ss_res += res * res;
    }
    // Flat data has no variance to explain; report 0 rather than 0/0.
    if (ss_tot > 0.0)
        line.r_squared = std::clamp(1.0 - ss_res / ss_tot, 0.0, 1.0);
    else
        line.r_squared = 0.0;
    return line;
}

TrendLine linear_trend(const RawSeries& series) {
    std::vector<double> values;
    values.reserve(series.points.size());
    for (const RawPoint& p : series.points)
        values.push_back(p.value);
    return linear_trend(values);
}

} // namespace tasig

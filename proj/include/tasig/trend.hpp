#pragma once

#include <span>

#include "tasig/series.hpp"

namespace tasig {

// Ordinary least squares of value against observation index.
struct TrendLine {
    double slope = 0.0;     // value units per observation
    double intercept = 0.0; // fitted value at index 0
    double r_squared = 0.0; // 0 by convention when total variance is 0
};

TrendLine linear_trend(std::span<const double> values);
TrendLine linear_trend(const RawSeries& series);

} // namespace tasig

#include "tasig/series.hpp"

#include <algorithm>
#include <cmath>

#include "tasig/errors.hpp"

namespace tasig {

void validate(const RawSeries& series) {
    if (series.points.size() < 2)
        throw ValidationError("ingest: series '" + series.label + "' has " +
                              std::to_string(series.points.size()) +
                              " points, need at least 2");
    for (std::size_t i = 0; i < series.points.size(); ++i) {
        const RawPoint& p = series.points[i];
        if (!std::isfinite(p.value) || p.value <= 0.0)
            throw ValidationError("ingest: point " + std::to_string(i) + " (" +
                                  format_date(p.date) + ") has non-positive or non-finite value");
        if (i > 0 && !(series.points[i - 1].date < p.date))
            throw ValidationError("ingest: dates not strictly increasing at point " +
                                  std::to_string(i) + " (" + format_date(p.date) + ")");
    }
}

void validate(const Candle& c, const std::string& context) {
    auto fail = [&](const std::string& what) {
        throw ValidationError(context.empty() ? what : context + ": " + what);
    };
    for (double v : {c.open, c.high, c.low, c.close})
        if (!std::isfinite(v))
            fail("non-finite candle field");
    if (c.low > std::min(c.open, c.close))
        fail("low above min(open, close)");
    if (c.high < std::max(c.open, c.close))
        fail("high below max(open, close)");
    if (c.low > c.high)
        fail("low above high");
    if (c.end < c.start)
        fail("candle end before start");
    if (c.n_obs < 1)
        fail("n_obs must be >= 1");
}

void validate(const CandleSeries& series) {
    for (std::size_t i = 0; i < series.candles.size(); ++i) {
        validate(series.candles[i], "ingest: candle " + std::to_string(i));
        if (i > 0) {
            if (!(series.candles[i - 1].start < series.candles[i].start))
                throw ValidationError("ingest: candle starts not strictly increasing at candle " +
                                      std::to_string(i));
            if (!(series.candles[i - 1].end < series.candles[i].start))
                throw ValidationError("ingest: overlapping buckets at candle " +
                                      std::to_string(i));
        }
    }
}

std::vector<double> closes_of(const CandleSeries& series) {
    std::vector<double> closes;
    closes.reserve(series.candles.size());
    for (const Candle& c : series.candles)
        closes.push_back(c.close);
    return closes;
}

CandleSeries resample(const RawSeries& series, Period period) {
    validate(series);

    CandleSeries out;
    out.period = period;
    out.label = series.label;

    std::int64_t current = 0;
    for (const RawPoint& p : series.points) {
        std::int64_t id = bucket_id(p.date, period);
        if (out.candles.empty() || id != current) {
            out.candles.push_back(Candle{p.value, p.value, p.value, p.value, p.date, p.date, 1});
            current = id;
        } else {
            Candle& c = out.candles.back();
            c.high = std::max(c.high, p.value);
            c.low = std::min(c.low, p.value);
            c.close = p.value;
            c.end = p.date;
            ++c.n_obs;
        }
    }
    return out;
}

} // namespace tasig

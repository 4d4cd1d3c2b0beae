#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tasig/dates.hpp"

namespace tasig {

// One raw observation: a dated price.
struct RawPoint {
    Date date;
    double value = 0.0;
};

// Ordered price observations, the ingestion product.
// Valid when: dates strictly increasing, all values finite and > 0,
// at least 2 points.
struct RawSeries {
    std::vector<RawPoint> points;
    std::string label;
    std::string market_tag; // optional free text, e.g. "stable"
};

// One OHLC bar over a calendar bucket. start/end are the dates of the first
// and last member observation.
struct Candle {
    double open = 0.0;
    double high = 0.0;
    double low = 0.0;
    double close = 0.0;
    Date start;
    Date end;
    int n_obs = 1;
};

struct CandleSeries {
    std::vector<Candle> candles;
    Period period = Period::month;
    std::string label;

    std::size_t size() const { return candles.size(); }
};

// Invariant checks. All throw ValidationError with a message naming the
// offending field; `context` is prefixed to the message when non-empty.
void validate(const RawSeries& series);
void validate(const Candle& candle, const std::string& context = {});
void validate(const CandleSeries& series);

/// Close values of every candle, in order.
std::vector<double> closes_of(const CandleSeries& series);

/// Buckets a raw series into one candle per non-empty calendar bucket.
/// Open/close are the first/last member values, high/low the extremes.
/// Empty buckets are skipped; no synthetic candles are produced.
CandleSeries resample(const RawSeries& series, Period period);

} // namespace tasig

#pragma once

#include <string>
#include <string_view>

#include "tasig/series.hpp"

namespace tasig {

/// Parses `date,value` CSV text (UTF-8, LF or CRLF, header mandatory).
/// Rows are sorted by date if not already; duplicate dates, non-positive or
/// non-finite values and malformed rows are reported with their line number.
RawSeries parse_raw_csv(std::string_view text, std::string_view label);

/// Parses `date,open,high,low,close` CSV text into candles, one row per
/// period bucket (n_obs = 1 each). Rows must be date-ordered, satisfy the
/// candle invariants and fall into distinct buckets.
CandleSeries parse_ohlc_csv(std::string_view text, std::string_view label, Period period);

// Canonical serializations with 6-decimal fixed prices. Parsing canonical
// output reproduces it byte for byte.
std::string to_csv(const RawSeries& series);
std::string to_csv(const CandleSeries& series);

/// Fixed 6-decimal price formatting used by every CSV emitter.
std::string format_value(double v);

} // namespace tasig

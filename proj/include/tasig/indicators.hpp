#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tasig/signals.hpp"

namespace tasig {

enum class IndicatorKind { ema, macd, macd_signal, rsi };

std::string_view to_string(IndicatorKind kind);

// Per-candle indicator values. `index` is the position in the source close
// series; indices are strictly increasing. EMA/MACD cover every index, RSI
// starts at the second close.
struct IndicatorPoint {
    std::size_t index;
    double value;
};

struct IndicatorSeries {
    IndicatorKind kind;
    std::vector<IndicatorPoint> points;
};

struct IndicatorConfig {
    int rsi_period = 14;
    double rsi_upper = 70.0;
    double rsi_lower = 30.0;
    int macd_fast = 12;  // shorter EMA period, must be < macd_slow
    int macd_slow = 26;
    int macd_signal_period = 9;
};

void validate(const IndicatorConfig& config);

/// Exponential moving average with smoothing s = 2/(period+1), seeded with
/// the first close. Same length as the input.
IndicatorSeries ema(std::span<const double> closes, int period);

/// MACD line (fast EMA minus slow EMA, pointwise) and its signal line
/// (EMA of the MACD values over macd_signal_period). Both full length.
std::pair<IndicatorSeries, IndicatorSeries> macd(std::span<const double> closes,
                                                 const IndicatorConfig& config);

// How per-step RSI gains/losses are measured: plain close differences, or
// differences normalized by the current close.
enum class RsiGainMode { absolute_change, relative_change };

/// Relative strength index in [0, 100]. Gains and losses are smoothed with
/// factor 1/period (seeded with the first step); a flat history reports the
/// neutral value 50. Defined from the second close onward.
IndicatorSeries rsi(std::span<const double> closes, int period,
                    RsiGainMode mode = RsiGainMode::absolute_change);

/// MACD/signal-line crossings. Bullish when the MACD line moves from at or
/// below the signal line to strictly above it, bearish mirrored. Exact
/// equality at the current step never fires.
std::vector<Signal> macd_crossovers(const IndicatorSeries& macd_line,
                                    const IndicatorSeries& signal_line);

/// RSI threshold crossings: bearish when RSI moves from at or below the
/// upper threshold to strictly above it, bullish when it moves from at or
/// above the lower threshold to strictly below it.
std::vector<Signal> rsi_threshold_signals(const IndicatorSeries& rsi_series,
                                          const IndicatorConfig& config);

/// Plot-ready `index,value` CSV with a header row.
std::string to_csv(const IndicatorSeries& series);

} // namespace tasig

#pragma once

#include <span>

#include "tasig/series.hpp"
#include "tasig/signals.hpp"

namespace tasig {

/// Heikin Ashi transform. Output has the same length and period; candle t
/// opens at the mean of the previous output open/close (seeded with the
/// first raw open/close) and closes at the mean of the four raw fields.
/// High/low extend over the raw high/low and the transformed open/close,
/// so the output always satisfies the candle invariants.
CandleSeries heikin_ashi(const CandleSeries& series);

// Geometry thresholds for the shape patterns. The shape gate is
//   body > body_epsilon * range
//   lower shadow >= shadow_body_ratio * body
//   upper shadow <= upper_shadow_cap * body
// and trend context compares closes k candles apart.
struct PatternConfig {
    double shadow_body_ratio = 2.0;
    double upper_shadow_cap = 0.25;
    int trend_lookback = 3;
    double body_epsilon = 1e-9;
};

void validate(const PatternConfig& config);

/// Scans for the five candlestick patterns and returns every (kind, index)
/// hit in index order. `trend_closes`, when non-empty, supplies the close
/// values used for the hammer / hanging-man trend context (pass the raw
/// closes when scanning a Heikin Ashi series); it must match the series
/// length. Series too short for a pattern's context yield no hits for it.
std::vector<Signal> detect_patterns(const CandleSeries& series,
                                    const PatternConfig& config,
                                    std::span<const double> trend_closes = {});

} // namespace tasig

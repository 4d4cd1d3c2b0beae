#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tasig/series.hpp"
#include "tasig/signals.hpp"
#include "tasig/wilcoxon.hpp"

namespace tasig {

// Forward returns collected for one signal kind: (close[t+H] - close[t]) /
// close[t] per signal at t, relative to the analyzed candle closes. Signals
// within H candles of the series end are counted in `skipped`.
struct ForwardReturnSample {
    SignalKind kind;
    int horizon = 0;
    std::vector<double> returns;
    int skipped = 0;
};

/// Collects forward returns per signal kind, in kind-name order. Only kinds
/// present in `signals` appear.
std::vector<ForwardReturnSample> forward_returns(const CandleSeries& series,
                                                 std::span<const Signal> signals,
                                                 int horizon);

enum class RowStatus { ok, insufficient_signals, no_nonzero_returns };

std::string_view to_string(RowStatus status);

struct SignificanceRow {
    SignalKind kind;
    int signal_count = 0; // total signals of the kind
    int used = 0;         // returns entering the test
    int skipped = 0;      // signals too close to the series end
    RowStatus status = RowStatus::insufficient_signals;
    std::optional<WilcoxonResult> test;
};

// Per-kind predictive-power table. Rows are sorted by kind name; rows with
// fewer than min_signals usable returns carry no p-value.
struct SignificanceReport {
    std::string label;
    std::string market_tag;
    Period period = Period::month;
    int horizon = 6;
    int min_signals = 3;
    std::vector<SignificanceRow> rows;
    std::string generated_at; // ISO-8601 UTC, excluded from comparisons
};

/// Runs the one-sided Wilcoxon test per kind, alternative chosen by the
/// kind's direction (bullish tests median forward return > 0, bearish < 0).
/// One row is produced per kind in `kinds` even when no signal of it exists.
SignificanceReport evaluate_signals(const CandleSeries& series,
                                    std::span<const Signal> signals,
                                    int horizon, int min_signals,
                                    std::span<const SignalKind> kinds = kAllSignalKinds);

// A forecast interval [start, end] emitted for each signal, carrying the
// kind's direction. `end` is clipped at the last candle with `truncated`
// set when the horizon overruns the series.
struct ForecastWindow {
    SignalKind kind;
    std::size_t start = 0;
    std::size_t end = 0;
    bool truncated = false;

    bool operator==(const ForecastWindow&) const = default;
};

std::vector<ForecastWindow> forecast_windows(const CandleSeries& series,
                                             std::span<const Signal> signals,
                                             int horizon);

} // namespace tasig

#include "tasig/indicators.hpp"

#include <algorithm>
#include <cstdio>

#include "tasig/errors.hpp"

namespace tasig {

std::string_view to_string(IndicatorKind kind) {
    switch (kind) {
    case IndicatorKind::ema: return "ema";
    case IndicatorKind::macd: return "macd";
    case IndicatorKind::macd_signal: return "macd_signal";
    case IndicatorKind::rsi: return "rsi";
    }
    return "?";
}

void validate(const IndicatorConfig& config) {
    if (config.rsi_period < 1)
        throw ValidationError("indicator: rsi_period must be >= 1");
    if (!(config.rsi_lower >= 0.0 && config.rsi_lower < config.rsi_upper && config.rsi_upper <= 100.0))
        throw ValidationError("indicator: need 0 <= rsi_lower < rsi_upper <= 100");
    if (config.macd_fast < 1 || config.macd_slow < 1 || config.macd_signal_period < 1)
        throw ValidationError("indicator: MACD periods must be >= 1");
    if (!(config.macd_fast < config.macd_slow))
        throw ValidationError("indicator: macd_fast must be < macd_slow");
}

namespace {

// Plain EMA recursion over values, seeded with the first one. The update
// form V + s*(C - V) keeps constant series exact; s == 1 (period 1) copies
// the input so the identity holds bit-for-bit.
std::vector<double> ema_values(std::span<const double> values, int period) {
    double s = 2.0 / (period + 1);
    if (s == 1.0)
        return {values.begin(), values.end()};
    std::vector<double> out;
    out.reserve(values.size());
    out.push_back(values[0]);
    for (std::size_t i = 1; i < values.size(); ++i)
        out.push_back(out.back() + s * (values[i] - out.back()));
    return out;
}

} // namespace

IndicatorSeries ema(std::span<const double> closes, int period) {
    if (closes.empty())
        throw ValidationError("indicator: ema needs a non-empty close series");
    if (period < 1)
        throw ValidationError("indicator: ema period must be >= 1");

    std::vector<double> values = ema_values(closes, period);
    IndicatorSeries out{IndicatorKind::ema, {}};
    out.points.reserve(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        out.points.push_back({i, values[i]});
    return out;
}

std::pair<IndicatorSeries, IndicatorSeries> macd(std::span<const double> closes,
                                                 const IndicatorConfig& config) {
    validate(config);
    if (closes.size() < 2)
        throw ValidationError("indicator: macd needs at least 2 closes");

    std::vector<double> fast = ema_values(closes, config.macd_fast);
    std::vector<double> slow = ema_values(closes, config.macd_slow);
    std::vector<double> diff(closes.size());
    for (std::size_t i = 0; i < closes.size(); ++i)
        diff[i] = fast[i] - slow[i];
    std::vector<double> sig = ema_values(diff, config.macd_signal_period);

    IndicatorSeries macd_line{IndicatorKind::macd, {}};
    IndicatorSeries signal_line{IndicatorKind::macd_signal, {}};
    macd_line.points.reserve(closes.size());
    signal_line.points.reserve(closes.size());
    for (std::size_t i = 0; i < closes.size(); ++i) {
        macd_line.points.push_back({i, diff[i]});
        signal_line.points.push_back({i, sig[i]});
    }
    return {std::move(macd_line), std::move(signal_line)};
}

IndicatorSeries rsi(std::span<const double> closes, int period, RsiGainMode mode) {
    if (closes.size() < 2)
        throw ValidationError("indicator: rsi needs at least 2 closes");
    if (period < 1)
        throw ValidationError("indicator: rsi period must be >= 1");

    double s = 1.0 / period;
    IndicatorSeries out{IndicatorKind::rsi, {}};
    out.points.reserve(closes.size() - 1);

    double avg_gain = 0.0;
    double avg_loss = 0.0;
    for (std::size_t i = 1; i < closes.size(); ++i) {
        double change = closes[i] - closes[i - 1];
        if (mode == RsiGainMode::relative_change)
            change /= closes[i];
        double gain = std::max(change, 0.0);
        double loss = std::max(-change, 0.0);
        if (i == 1) {
            avg_gain = gain;
            avg_loss = loss;
        } else {
            avg_gain = s * gain + (1.0 - s) * avg_gain;
            avg_loss = s * loss + (1.0 - s) * avg_loss;
        }
        double total = avg_gain + avg_loss;
        // The ratio is computed first so the result stays in [0, 100] even
        // at the saturated ends (gain/total is exactly 1 or 0 there).
        double value = total > 0.0 ? 100.0 * (avg_gain / total) : 50.0;
        out.points.push_back({i, value});
    }
    return out;
}

std::vector<Signal> macd_crossovers(const IndicatorSeries& macd_line,
                                    const IndicatorSeries& signal_line) {
    if (macd_line.points.size() != signal_line.points.size())
        throw ValidationError("indicator: macd/signal length mismatch");
    if (macd_line.points.size() < 2)
        throw ValidationError("indicator: crossover scan needs at least 2 points");

    std::vector<Signal> signals;
    for (std::size_t i = 1; i < macd_line.points.size(); ++i) {
        if (macd_line.points[i].index != signal_line.points[i].index)
            throw ValidationError("indicator: macd/signal index mismatch");
        double prev_m = macd_line.points[i - 1].value;
        double prev_s = signal_line.points[i - 1].value;
        double cur_m = macd_line.points[i].value;
        double cur_s = signal_line.points[i].value;
        if (prev_m <= prev_s && cur_m > cur_s)
            signals.push_back({SignalKind::macd_bullish, macd_line.points[i].index});
        else if (prev_m >= prev_s && cur_m < cur_s)
            signals.push_back({SignalKind::macd_bearish, macd_line.points[i].index});
    }
    return signals;
}

std::vector<Signal> rsi_threshold_signals(const IndicatorSeries& rsi_series,
                                          const IndicatorConfig& config) {
    validate(config);
    std::vector<Signal> signals;
    for (std::size_t i = 1; i < rsi_series.points.size(); ++i) {
        double prev = rsi_series.points[i - 1].value;
        double cur = rsi_series.points[i].value;
        if (prev <= config.rsi_upper && cur > config.rsi_upper)
            signals.push_back({SignalKind::rsi_bearish, rsi_series.points[i].index});
        if (prev >= config.rsi_lower && cur < config.rsi_lower)
            signals.push_back({SignalKind::rsi_bullish, rsi_series.points[i].index});
    }
    return signals;
}

std::string to_csv(const IndicatorSeries& series) {
    std::string out = "index,value\n";
    char buf[64];
    for (const IndicatorPoint& p : series.points) {
        std::snprintf(buf, sizeof(buf), "%zu,%.6f\n", p.index, p.value);
        out += buf;
    }
    return out;
}

} // namespace tasig

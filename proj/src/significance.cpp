#include "tasig/significance.hpp"

#include <algorithm>
#include <ctime>
#include <map>

#include "tasig/errors.hpp"

namespace tasig {

std::string_view to_string(RowStatus status) {
    switch (status) {
    case RowStatus::ok: return "ok";
    case RowStatus::insufficient_signals: return "insufficient signals";
    case RowStatus::no_nonzero_returns: return "no nonzero returns";
    }
    return "?";
}

namespace {

bool kind_name_less(SignalKind a, SignalKind b) {
    return to_string(a) < to_string(b);
}

std::string utc_timestamp() {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace

std::vector<ForwardReturnSample> forward_returns(const CandleSeries& series,
                                                 std::span<const Signal> signals, int horizon) {
    if (horizon < 1)
        throw ValidationError("significance: horizon must be >= 1");

    std::map<SignalKind, ForwardReturnSample, bool (*)(SignalKind, SignalKind)> per_kind(
        kind_name_less);
    const std::size_t n = series.candles.size();
    for (const Signal& s : signals) {
        if (s.index >= n)
            throw ValidationError("significance: signal index " + std::to_string(s.index) +
                                  " out of range for " + std::to_string(n) + " candles");
        auto [it, inserted] = per_kind.try_emplace(s.kind);
        if (inserted) {
            it->second.kind = s.kind;
            it->second.horizon = horizon;
        }
        std::size_t target = s.index + std::size_t(horizon);
        if (target < n) {
            double base = series.candles[s.index].close;
            double ahead = series.candles[target].close;
            it->second.returns.push_back((ahead - base) / base);
        } else {
            ++it->second.skipped;
        }
    }

    std::vector<ForwardReturnSample> out;
    out.reserve(per_kind.size());
    for (auto& [kind, sample] : per_kind)
        out.push_back(std::move(sample));
    return out;
}

SignificanceReport evaluate_signals(const CandleSeries& series, std::span<const Signal> signals,
                                    int horizon, int min_signals,
                                    std::span<const SignalKind> kinds) {
    if (min_signals < 3)
        throw ValidationError("significance: min_signals must be >= 3");

    std::vector<ForwardReturnSample> samples = forward_returns(series, signals, horizon);

    SignificanceReport report;
    report.label = series.label;
    report.period = series.period;
    report.horizon = horizon;
    report.min_signals = min_signals;
    report.generated_at = utc_timestamp();

    for (SignalKind kind : kinds) {
        SignificanceRow row;
        row.kind = kind;
        auto it = std::find_if(samples.begin(), samples.end(),
                               [&](const ForwardReturnSample& s) { return s.kind == kind; });
        if (it != samples.end()) {
            row.used = int(it->returns.size());
            row.skipped = it->skipped;
            row.signal_count = row.used + row.skipped;
        }
        if (row.used < min_signals) {
            row.status = RowStatus::insufficient_signals;
        } else {
            Alternative alt = direction_of(kind) == Direction::bullish ? Alternative::greater
                                                                       : Alternative::less;
            try {
                row.test = wilcoxon_signed_rank(it->returns, alt);
                row.status = RowStatus::ok;
            } catch (const ValidationError&) {
                // Every collected return was exactly zero.
                row.status = RowStatus::no_nonzero_returns;
            }
        }
        report.rows.push_back(std::move(row));
    }

    std::sort(report.rows.begin(), report.rows.end(),
              [](const SignificanceRow& a, const SignificanceRow& b) {
                  return kind_name_less(a.kind, b.kind);
              });
    return report;
}

std::vector<ForecastWindow> forecast_windows(const CandleSeries& series,
                                             std::span<const Signal> signals, int horizon) {
    if (horizon < 1)
        throw ValidationError("significance: horizon must be >= 1");
    const std::size_t n = series.candles.size();

    std::vector<ForecastWindow> windows;
    windows.reserve(signals.size());
    for (const Signal& s : signals) {
        if (s.index >= n)
            throw ValidationError("significance: signal index " + std::to_string(s.index) +
                                  " out of range for " + std::to_string(n) + " candles");
        ForecastWindow w;
        w.kind = s.kind;
        w.start = s.index;
        std::size_t target = s.index + std::size_t(horizon);
        w.truncated = target > n - 1;
        w.end = w.truncated ? n - 1 : target;
        windows.push_back(w);
    }
    return windows;
}

} // namespace tasig

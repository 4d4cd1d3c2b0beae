#include "tasig/candlestick.hpp"

#include <algorithm>
#include <cmath>

#include "tasig/errors.hpp"

namespace tasig {

CandleSeries heikin_ashi(const CandleSeries& series) {
    if (series.candles.empty())
        throw ValidationError("candlestick: heikin_ashi needs a non-empty series");

    CandleSeries out;
    out.period = series.period;
    out.label = series.label;
    out.candles.reserve(series.candles.size());

    double prev_open = 0.0;
    double prev_close = 0.0;
    for (std::size_t i = 0; i < series.candles.size(); ++i) {
        const Candle& raw = series.candles[i];
        double ha_close = (raw.open + raw.high + raw.low + raw.close) / 4.0;
        double ha_open = i == 0 ? (raw.open + raw.close) / 2.0 : (prev_open + prev_close) / 2.0;
        double ha_high = std::max({raw.high, ha_open, ha_close});
        double ha_low = std::min({raw.low, ha_open, ha_close});
        out.candles.push_back(Candle{ha_open, ha_high, ha_low, ha_close, raw.start, raw.end, raw.n_obs});
        prev_open = ha_open;
        prev_close = ha_close;
    }
    return out;
}

void validate(const PatternConfig& config) {
    if (!(config.shadow_body_ratio > 0.0))
        throw ValidationError("candlestick: shadow_body_ratio must be > 0");
    if (config.trend_lookback < 1)
        throw ValidationError("candlestick: trend_lookback must be >= 1");
    if (!(config.upper_shadow_cap >= 0.0))
        throw ValidationError("candlestick: upper_shadow_cap must be >= 0");
    if (!(config.body_epsilon > 0.0 && config.body_epsilon < 1.0))
        throw ValidationError("candlestick: body_epsilon must be in (0, 1)");
}

namespace {

struct Body {
    double lo;
    double hi;
};

Body body_of(const Candle& c) {
    return {std::min(c.open, c.close), std::max(c.open, c.close)};
}

bool is_bullish(const Candle& c) { return c.close > c.open; }
bool is_bearish(const Candle& c) { return c.close < c.open; }

} // namespace

std::vector<Signal> detect_patterns(const CandleSeries& series, const PatternConfig& config,
                                    std::span<const double> trend_closes) {
    validate(config);
    const std::vector<Candle>& candles = series.candles;
    if (!trend_closes.empty() && trend_closes.size() != candles.size())
        throw ValidationError("candlestick: trend close series length mismatch");

    std::vector<double> own_closes;
    if (trend_closes.empty()) {
        own_closes = closes_of(series);
        trend_closes = own_closes;
    }

    const std::size_t k = std::size_t(config.trend_lookback);
    std::vector<Signal> signals;

    for (std::size_t t = 0; t < candles.size(); ++t) {
        const Candle& cur = candles[t];

        // Shape patterns need the trend context closes at t-1 and t-1-k.
        if (t >= k + 1) {
            double body = std::fabs(cur.close - cur.open);
            double lower_shadow = std::min(cur.open, cur.close) - cur.low;
            double upper_shadow = cur.high - std::max(cur.open, cur.close);
            double range = cur.high - cur.low;
            bool shape = body > config.body_epsilon * range &&
                         lower_shadow >= config.shadow_body_ratio * body &&
                         upper_shadow <= config.upper_shadow_cap * body;
            if (shape) {
                double prev = trend_closes[t - 1];
                double base = trend_closes[t - 1 - k];
                if (prev < base)
                    signals.push_back({SignalKind::hammer, t});
                else if (prev > base)
                    signals.push_back({SignalKind::hanging_man, t});
            }
        }

        if (t >= 1) {
            const Candle& pre = candles[t - 1];
            Body cur_body = body_of(cur);
            Body pre_body = body_of(pre);
            bool engulfs = cur_body.lo < pre_body.lo && cur_body.hi > pre_body.hi;

            if (is_bearish(pre) && is_bullish(cur) && engulfs)
                signals.push_back({SignalKind::bullish_engulfing, t});
            if (is_bullish(pre) && is_bearish(cur) && engulfs)
                signals.push_back({SignalKind::bearish_engulfing, t});

            double midpoint = (pre.open + pre.close) / 2.0;
            if (is_bullish(pre) && cur.open > pre.close && cur.close < midpoint &&
                cur.close > pre.open)
                signals.push_back({SignalKind::dark_cloud_cover, t});
        }
    }
    return signals;
}

} // namespace tasig

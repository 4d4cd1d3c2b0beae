#include "tasig/signals.hpp"

#include <algorithm>

#include "tasig/errors.hpp"

namespace tasig {

Direction direction_of(SignalKind kind) {
    switch (kind) {
    case SignalKind::hammer:
    case SignalKind::bullish_engulfing:
    case SignalKind::macd_bullish:
    case SignalKind::rsi_bullish:
        return Direction::bullish;
    case SignalKind::hanging_man:
    case SignalKind::bearish_engulfing:
    case SignalKind::dark_cloud_cover:
    case SignalKind::macd_bearish:
    case SignalKind::rsi_bearish:
        return Direction::bearish;
    }
    throw ValidationError("invalid signal kind");
}

bool is_pattern_kind(SignalKind kind) {
    switch (kind) {
    case SignalKind::hammer:
    case SignalKind::hanging_man:
    case SignalKind::bullish_engulfing:
    case SignalKind::bearish_engulfing:
    case SignalKind::dark_cloud_cover:
        return true;
    default:
        return false;
    }
}

std::string_view to_string(SignalKind kind) {
    switch (kind) {
    case SignalKind::hammer: return "hammer";
    case SignalKind::hanging_man: return "hanging_man";
    case SignalKind::bullish_engulfing: return "bullish_engulfing";
    case SignalKind::bearish_engulfing: return "bearish_engulfing";
    case SignalKind::dark_cloud_cover: return "dark_cloud_cover";
    case SignalKind::macd_bullish: return "macd_bullish";
    case SignalKind::macd_bearish: return "macd_bearish";
    case SignalKind::rsi_bullish: return "rsi_bullish";
    case SignalKind::rsi_bearish: return "rsi_bearish";
    }
    return "?";
}

std::string_view to_string(Direction d) {
    return d == Direction::bullish ? "bullish" : "bearish";
}

SignalKind signal_kind_from_string(std::string_view s) {
    for (SignalKind kind : kAllSignalKinds)
        if (to_string(kind) == s)
            return kind;
    throw ValidationError("unknown signal kind '" + std::string(s) + "'");
}

void sort_signals(std::vector<Signal>& signals) {
    std::sort(signals.begin(), signals.end(), [](const Signal& a, const Signal& b) {
        if (a.index != b.index)
            return a.index < b.index;
        return to_string(a.kind) < to_string(b.kind);
    });
}

} // namespace tasig

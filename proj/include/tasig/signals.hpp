#pragma once

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

namespace tasig {

enum class Direction { bullish, bearish };

// The nine detectable signal kinds: five candlestick patterns plus the
// MACD/RSI crossing events. Each kind has a fixed direction.
enum class SignalKind {
    hammer,
    hanging_man,
    bullish_engulfing,
    bearish_engulfing,
    dark_cloud_cover,
    macd_bullish,
    macd_bearish,
    rsi_bullish,
    rsi_bearish,
};

inline constexpr std::array<SignalKind, 9> kAllSignalKinds = {
    SignalKind::hammer,          SignalKind::hanging_man,
    SignalKind::bullish_engulfing, SignalKind::bearish_engulfing,
    SignalKind::dark_cloud_cover, SignalKind::macd_bullish,
    SignalKind::macd_bearish,    SignalKind::rsi_bullish,
    SignalKind::rsi_bearish,
};

Direction direction_of(SignalKind kind);
bool is_pattern_kind(SignalKind kind);

std::string_view to_string(SignalKind kind);
std::string_view to_string(Direction d);
SignalKind signal_kind_from_string(std::string_view s);

// A detected event at a candle index. The index names the candle completing
// the pattern or crossing; direction is derived from the kind.
struct Signal {
    SignalKind kind;
    std::size_t index;

    bool operator==(const Signal&) const = default;
};

/// Stable report order: by candle index, ties broken by kind name.
void sort_signals(std::vector<Signal>& signals);

} // namespace tasig

#pragma once

// Shared fixtures and seeded generators for the test suites.

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <vector>

#include "tasig/series.hpp"

namespace tasig::test {

inline Date make_date(int y, unsigned m, unsigned d) {
    return std::chrono::year{y} / std::chrono::month{m} / std::chrono::day{d};
}

/// Start date for candle i: consecutive calendar months from 2010-01.
inline Date month_date(std::size_t i) {
    return make_date(2010 + int(i / 12), unsigned(1 + i % 12), 1);
}

inline Candle make_candle(double o, double h, double l, double c, std::size_t i = 0) {
    return Candle{o, h, l, c, month_date(i), month_date(i), 1};
}

/// Monthly candle series from explicit OHLC tuples.
inline CandleSeries make_series(const std::vector<std::array<double, 4>>& bars) {
    CandleSeries series;
    series.period = Period::month;
    series.label = "test";
    for (std::size_t i = 0; i < bars.size(); ++i)
        series.candles.push_back(
            make_candle(bars[i][0], bars[i][1], bars[i][2], bars[i][3], i));
    return series;
}

/// n identical flat candles (open = high = low = close).
inline CandleSeries flat_series(std::size_t n, double value) {
    CandleSeries series;
    series.period = Period::month;
    series.label = "flat";
    for (std::size_t i = 0; i < n; ++i)
        series.candles.push_back(make_candle(value, value, value, value, i));
    return series;
}

/// Positive random-walk close series.
inline std::vector<double> gen_closes(std::mt19937& rng, std::size_t n, double start = 100.0,
                                      double vol = 0.03) {
    std::normal_distribution<double> step(0.0, vol);
    std::vector<double> closes;
    closes.reserve(n);
    double v = start;
    for (std::size_t i = 0; i < n; ++i) {
        v *= std::exp(step(rng));
        closes.push_back(v);
    }
    return closes;
}

/// Random valid monthly OHLC series around a drifting base price.
inline CandleSeries gen_candle_series(std::mt19937& rng, std::size_t n, double start = 100.0) {
    std::normal_distribution<double> body(0.0, 0.04);
    std::uniform_real_distribution<double> wick(0.0, 0.03);
    CandleSeries series;
    series.period = Period::month;
    series.label = "gen";
    double base = start;
    for (std::size_t i = 0; i < n; ++i) {
        double open = base;
        double close = base * std::exp(body(rng));
        double high = std::max(open, close) * (1.0 + wick(rng));
        double low = std::min(open, close) * (1.0 - wick(rng));
        series.candles.push_back(Candle{open, high, low, close, month_date(i), month_date(i), 1});
        base = close;
    }
    return series;
}

/// Weekly raw series: consecutive Fridays from 2015-01-02.
inline RawSeries gen_raw_weekly(std::mt19937& rng, std::size_t n, double start = 100.0) {
    RawSeries series;
    series.label = "weekly";
    std::normal_distribution<double> step(0.0, 0.02);
    std::chrono::sys_days day{make_date(2015, 1, 2)};
    double v = start;
    for (std::size_t i = 0; i < n; ++i) {
        v *= std::exp(step(rng));
        series.points.push_back({Date{day}, v});
        day += std::chrono::days{7};
    }
    return series;
}

/// Tie-free differences: distinct magnitudes with random signs.
inline std::vector<double> gen_tie_free_diffs(std::mt19937& rng, std::size_t n) {
    std::uniform_real_distribution<double> jitter(0.01, 0.99);
    std::bernoulli_distribution sign(0.5);
    std::vector<double> diffs;
    diffs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        double magnitude = double(i + 1) + jitter(rng); // distinct by construction
        diffs.push_back(sign(rng) ? magnitude : -magnitude);
    }
    std::shuffle(diffs.begin(), diffs.end(), rng);
    return diffs;
}

} // namespace tasig::test

// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each check uses an independent oracle or a frozen hand-derived
// value; tolerances are pinned in the criterion implementations below.

#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "tasig/candlestick.hpp"
#include "tasig/csv.hpp"
#include "tasig/indicators.hpp"
#include "tasig/report.hpp"
#include "tasig/series.hpp"
#include "tasig/significance.hpp"
#include "tasig/wilcoxon.hpp"

#include "oracles.hpp"
#include "support.hpp"

namespace fs = std::filesystem;
using namespace tasig;

namespace {

int failures = 0;

void record(int number, const char* title, bool ok, const std::string& detail = {}) {
    std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", number, title);
    if (!ok) {
        ++failures;
        if (!detail.empty())
            std::printf("       %s\n", detail.c_str());
    }
}

// --- 1: exact DP vs full 2^n enumeration -----------------------------------

bool criterion_1(std::string& detail) {
    std::mt19937 rng(101);
    for (int rep = 0; rep < 200; ++rep) {
        int n = 1 + int(rng() % 12);
        std::vector<double> d = test::gen_tie_free_diffs(rng, std::size_t(n));
        for (Alternative alt : {Alternative::greater, Alternative::less}) {
            WilcoxonResult res = wilcoxon_signed_rank(d, alt);
            if (res.method != PvalueMethod::exact) {
                detail = "expected exact method at n=" + std::to_string(n);
                return false;
            }
            double want = test::enumerate_signed_rank_p(res.w_plus, n, alt);
            if (std::fabs(res.p_value - want) > 1e-12) {
                detail = "rep " + std::to_string(rep) + ": DP p " +
                         std::to_string(res.p_value) + " vs enumeration " +
                         std::to_string(want);
                return false;
            }
        }
    }
    std::vector<double> canonical{1, 2, 3};
    WilcoxonResult res = wilcoxon_signed_rank(canonical, Alternative::greater);
    if (res.p_value != 0.125) {
        detail = "canonical [1,2,3] gave p=" + std::to_string(res.p_value);
        return false;
    }
    return true;
}

// --- 2: normal approximation near the exact cutoff -------------------------

bool criterion_2(std::string& detail) {
    std::mt19937 rng(202);
    for (int rep = 0; rep < 50; ++rep) {
        int n = 20 + int(rng() % 6); // 20..25
        std::vector<double> d = test::gen_tie_free_diffs(rng, std::size_t(n));
        for (Alternative alt : {Alternative::greater, Alternative::less}) {
            WilcoxonResult res = wilcoxon_signed_rank(d, alt);
            if (res.method != PvalueMethod::exact) {
                detail = "expected exact method at n=" + std::to_string(n);
                return false;
            }
            double approx = normal_signed_rank_p(res.w_plus, res.n, 0.0, alt);
            if (std::fabs(res.p_value - approx) > 0.02) {
                detail = "rep " + std::to_string(rep) + " n=" + std::to_string(n) +
                         ": |exact - approx| = " +
                         std::to_string(std::fabs(res.p_value - approx));
                return false;
            }
        }
    }
    return true;
}

// --- 3: EMA recursion vs closed form ---------------------------------------

bool criterion_3(std::string& detail) {
    std::mt19937 rng(303);
    for (int rep = 0; rep < 100; ++rep) {
        std::size_t len = 1 + rng() % 50;
        std::vector<double> closes = test::gen_closes(rng, len);
        for (int period = 1; period <= 30; ++period) {
            IndicatorSeries got = ema(closes, period);
            std::vector<double> want = test::ema_closed_form(closes, period);
            for (std::size_t i = 0; i < want.size(); ++i) {
                double rel = std::fabs(got.points[i].value - want[i]) /
                             std::fabs(want[i]);
                if (rel > 1e-9) {
                    detail = "rep " + std::to_string(rep) + " period " +
                             std::to_string(period) + " index " + std::to_string(i) +
                             ": relative error " + std::to_string(rel);
                    return false;
                }
            }
        }
    }
    return true;
}

// --- 4: indicator bounds and fixed points ----------------------------------

bool criterion_4(std::string& detail) {
    std::mt19937 rng(404);
    for (int rep = 0; rep < 100; ++rep) {
        std::vector<double> closes = test::gen_closes(rng, 5 + rng() % 120);
        for (const IndicatorPoint& p : rsi(closes, 14).points)
            if (p.value < 0.0 || p.value > 100.0) {
                detail = "RSI out of bounds: " + std::to_string(p.value);
                return false;
            }
    }
    std::vector<double> up, down;
    for (int i = 0; i < 40; ++i) {
        up.push_back(100.0 + i);
        down.push_back(140.0 - i);
    }
    for (const IndicatorPoint& p : rsi(up, 14).points)
        if (p.value != 100.0) {
            detail = "monotone-up RSI " + std::to_string(p.value);
            return false;
        }
    for (const IndicatorPoint& p : rsi(down, 14).points)
        if (p.value != 0.0) {
            detail = "monotone-down RSI " + std::to_string(p.value);
            return false;
        }

    std::vector<double> constant(60, 250.0);
    auto [line, signal] = macd(constant, IndicatorConfig{});
    for (const IndicatorPoint& p : line.points)
        if (p.value != 0.0) {
            detail = "constant-series MACD " + std::to_string(p.value);
            return false;
        }
    for (const IndicatorPoint& p : signal.points)
        if (p.value != 0.0) {
            detail = "constant-series signal " + std::to_string(p.value);
            return false;
        }
    if (!macd_crossovers(line, signal).empty()) {
        detail = "constant series produced crossover signals";
        return false;
    }
    if (!detect_patterns(test::flat_series(60, 250.0), PatternConfig{}).empty()) {
        detail = "constant series produced pattern signals";
        return false;
    }
    return true;
}

// --- 5: Heikin Ashi properties ---------------------------------------------

bool criterion_5(std::string& detail) {
    CandleSeries flat = test::flat_series(25, 42.0);
    CandleSeries ha_flat = heikin_ashi(flat);
    for (const Candle& c : ha_flat.candles)
        if (c.open != 42.0 || c.high != 42.0 || c.low != 42.0 || c.close != 42.0) {
            detail = "constant-candle fixed point violated";
            return false;
        }

    std::mt19937 rng(505);
    for (int rep = 0; rep < 100; ++rep) {
        CandleSeries s = test::gen_candle_series(rng, 10 + rng() % 80);
        CandleSeries ha = heikin_ashi(s);
        for (std::size_t i = 0; i < s.size(); ++i) {
            const Candle& raw = s.candles[i];
            const Candle& h = ha.candles[i];
            double mean = 0.25 * (raw.open + raw.high + raw.low + raw.close);
            if (std::fabs(h.close - mean) > 1e-12 * std::fabs(mean)) {
                detail = "HA close is not the 4-field mean at index " + std::to_string(i);
                return false;
            }
            if (h.low > std::min(h.open, h.close) || h.high < std::max(h.open, h.close)) {
                detail = "HA candle invariant violated at index " + std::to_string(i);
                return false;
            }
        }

        // Affine map a*p + b with a > 0 commutes with the transform.
        double a = 2.5, b = 11.0;
        CandleSeries mapped = s;
        for (Candle& c : mapped.candles) {
            c.open = a * c.open + b;
            c.high = a * c.high + b;
            c.low = a * c.low + b;
            c.close = a * c.close + b;
        }
        CandleSeries ha_mapped = heikin_ashi(mapped);
        for (std::size_t i = 0; i < s.size(); ++i) {
            const Candle& lhs = ha_mapped.candles[i];
            const Candle& rhs = ha.candles[i];
            auto close_enough = [a, b](double x, double y) {
                double want = a * y + b;
                return std::fabs(x - want) <= 1e-9 * std::fabs(want);
            };
            if (!close_enough(lhs.open, rhs.open) || !close_enough(lhs.high, rhs.high) ||
                !close_enough(lhs.low, rhs.low) || !close_enough(lhs.close, rhs.close)) {
                detail = "HA affine equivariance violated at index " + std::to_string(i);
                return false;
            }
        }
    }
    return true;
}

// --- 6: resampling vs naive re-bucketing -----------------------------------

bool criterion_6(std::string& detail) {
    std::mt19937 rng(606);
    for (int rep = 0; rep < 50; ++rep) {
        RawSeries raw = test::gen_raw_weekly(rng, 30 + rng() % 400);
        CandleSeries got = resample(raw, Period::month);

        // Oracle: group points by the "YYYY-MM" prefix of their dates.
        std::vector<std::vector<RawPoint>> groups;
        std::string last_key;
        for (const RawPoint& p : raw.points) {
            std::string key = format_date(p.date).substr(0, 7);
            if (key != last_key) {
                groups.emplace_back();
                last_key = key;
            }
            groups.back().push_back(p);
        }
        if (got.candles.size() != groups.size()) {
            detail = "rep " + std::to_string(rep) + ": " +
                     std::to_string(got.candles.size()) + " candles vs oracle " +
                     std::to_string(groups.size());
            return false;
        }
        for (std::size_t i = 0; i < groups.size(); ++i) {
            const auto& g = groups[i];
            const Candle& c = got.candles[i];
            double high = g.front().value, low = g.front().value;
            for (const RawPoint& p : g) {
                high = std::max(high, p.value);
                low = std::min(low, p.value);
            }
            bool ok = c.open == g.front().value && c.close == g.back().value &&
                      c.high == high && c.low == low && c.start == g.front().date &&
                      c.end == g.back().date && c.n_obs == int(g.size());
            if (!ok) {
                detail = "rep " + std::to_string(rep) + ": candle " + std::to_string(i) +
                         " differs from oracle";
                return false;
            }
        }
    }
    return true;
}

// --- 7: end-to-end determinism + constructed significance fixture ----------

std::string strip_timestamp(std::string text) {
    static const std::regex json_ts("\"generated_at\": \"[^\"]*\"");
    static const std::regex txt_ts("generated: [0-9TZ:-]*");
    text = std::regex_replace(text, json_ts, "\"generated_at\": \"\"");
    return std::regex_replace(text, txt_ts, "generated:");
}

bool criterion_7(std::string& detail) {
    RunConfig config;
    config.input_path = TASIG_DATA_DIR "/synthetic_weekly.csv";
    fs::path base = fs::temp_directory_path() / "tasig_acceptance";
    fs::remove_all(base);

    config.output_dir = (base / "a").string();
    RunResult first = run(config);
    config.output_dir = (base / "b").string();
    RunResult second = run(config);
    if (first.written.size() != 7 || second.written.size() != 7) {
        detail = "expected 7 emitted files";
        return false;
    }
    for (std::size_t i = 0; i < first.written.size(); ++i) {
        std::string lhs = strip_timestamp(read_file(first.written[i]));
        std::string rhs = strip_timestamp(read_file(second.written[i]));
        if (lhs != rhs) {
            detail = "nondeterministic output: " + first.written[i].filename().string();
            return false;
        }
    }
    fs::remove_all(base);

    // Constructed fixture: five bullish signals, each before a strictly
    // positive forward return.
    std::vector<std::array<double, 4>> bars;
    for (double c : {100.0, 100.0, 101.0, 103.0, 106.0, 110.0, 115.0, 121.0, 128.0, 136.0})
        bars.push_back({c, c, c, c});
    CandleSeries series = test::make_series(bars);
    std::vector<Signal> bullish;
    for (std::size_t t = 0; t < 5; ++t) bullish.push_back({SignalKind::macd_bullish, t});
    SignificanceReport rep = evaluate_signals(series, bullish, 2, 3);
    const SignificanceRow* row = nullptr;
    for (const SignificanceRow& r : rep.rows)
        if (r.kind == SignalKind::macd_bullish) row = &r;
    if (!row || !row->test || row->test->p_value != 0.03125) {
        detail = "bullish fixture p != 0.03125";
        return false;
    }

    std::vector<Signal> bearish;
    for (std::size_t t = 0; t < 5; ++t) bearish.push_back({SignalKind::macd_bearish, t});
    rep = evaluate_signals(series, bearish, 2, 3);
    row = nullptr;
    for (const SignificanceRow& r : rep.rows)
        if (r.kind == SignalKind::macd_bearish) row = &r;
    if (!row || !row->test || row->test->p_value != 1.0) {
        detail = "flipped fixture p != 1.0";
        return false;
    }
    return true;
}

// --- 8: pattern detector vs naive re-scan ----------------------------------

bool criterion_8(std::string& detail) {
    std::mt19937 rng(808);
    PatternConfig cfg;
    for (int rep = 0; rep < 50; ++rep) {
        CandleSeries s = test::gen_candle_series(rng, 30 + rng() % 170);
        std::vector<Signal> got = detect_patterns(s, cfg);
        sort_signals(got);
        std::vector<Signal> want = test::naive_detect_patterns(s, cfg);
        if (got != want) {
            detail = "rep " + std::to_string(rep) + ": detector (" +
                     std::to_string(got.size()) + " hits) differs from oracle (" +
                     std::to_string(want.size()) + ")";
            return false;
        }
        for (const Signal& x : got)
            for (const Signal& y : got) {
                if (x.index != y.index) continue;
                bool same_index_conflict =
                    (x.kind == SignalKind::hammer && y.kind == SignalKind::hanging_man) ||
                    (x.kind == SignalKind::bullish_engulfing &&
                     y.kind == SignalKind::bearish_engulfing);
                if (same_index_conflict) {
                    detail = "exclusive patterns co-fired at index " +
                             std::to_string(x.index);
                    return false;
                }
            }
    }
    return true;
}

// --- 9: pipeline scale invariance ------------------------------------------

bool criterion_9(std::string& detail) {
    fs::path base = fs::temp_directory_path() / "tasig_acceptance_scale";
    fs::remove_all(base);
    fs::create_directories(base);

    // Scale the bundled dataset by 1000, preserving canonical formatting.
    std::string text = read_file(TASIG_DATA_DIR "/synthetic_weekly.csv");
    RawSeries raw = parse_raw_csv(text, "synthetic_weekly");
    for (RawPoint& p : raw.points) p.value *= 1000.0;
    fs::path scaled_csv = base / "scaled.csv";
    {
        std::ofstream out(scaled_csv, std::ios::binary);
        out << to_csv(raw);
    }

    RunConfig config;
    config.input_path = TASIG_DATA_DIR "/synthetic_weekly.csv";
    config.label = "synthetic_weekly";
    config.output_dir = (base / "orig").string();
    run(config);
    config.input_path = scaled_csv.string();
    config.output_dir = (base / "scaled").string();
    run(config);

    for (const char* name : {"signals.json", "forecasts.json"}) {
        std::string lhs = read_file(base / "orig" / name);
        std::string rhs = read_file(base / "scaled" / name);
        if (lhs != rhs) {
            detail = std::string(name) + " changed under scaling";
            return false;
        }
    }
    std::string lhs = strip_timestamp(read_file(base / "orig" / "significance.json"));
    std::string rhs = strip_timestamp(read_file(base / "scaled" / "significance.json"));
    if (lhs != rhs) {
        detail = "significance.json changed under scaling";
        return false;
    }

    // Forward returns agree to 1e-12 relative.
    config.input_path = TASIG_DATA_DIR "/synthetic_weekly.csv";
    AnalysisResult orig = analyze(config);
    config.input_path = scaled_csv.string();
    AnalysisResult scaled = analyze(config);
    std::vector<ForwardReturnSample> a =
        forward_returns(orig.candles, orig.signals, config.horizon);
    std::vector<ForwardReturnSample> b =
        forward_returns(scaled.candles, scaled.signals, config.horizon);
    if (a.size() != b.size()) {
        detail = "forward-return sample counts differ";
        return false;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].returns.size() != b[i].returns.size()) {
            detail = "forward-return counts differ for a kind";
            return false;
        }
        for (std::size_t j = 0; j < a[i].returns.size(); ++j) {
            double x = a[i].returns[j], y = b[i].returns[j];
            double scale = std::max(std::fabs(x), std::fabs(y));
            if (scale > 0 && std::fabs(x - y) > 1e-12 * scale) {
                detail = "forward return differs beyond 1e-12 relative";
                return false;
            }
        }
    }
    fs::remove_all(base);
    return true;
}

} // namespace

int main() {
    struct Criterion {
        int number;
        const char* title;
        std::function<bool(std::string&)> check;
    };
    const std::vector<Criterion> criteria{
        {1, "exact Wilcoxon DP equals 2^n enumeration (n <= 12, 1e-12)", criterion_1},
        {2, "normal approximation within 0.02 of exact (20 <= n <= 25)", criterion_2},
        {3, "EMA recursion matches closed form (<= 1e-9 relative)", criterion_3},
        {4, "indicator bounds and constant-series fixed points", criterion_4},
        {5, "Heikin Ashi fixed point, mean-close, invariants, affine equivariance",
         criterion_5},
        {6, "monthly resampling equals naive re-bucketing oracle", criterion_6},
        {7, "end-to-end determinism and exact significance fixture", criterion_7},
        {8, "pattern detector equals naive re-scan; exclusive kinds never co-fire",
         criterion_8},
        {9, "pipeline invariant under x1000 price scaling", criterion_9},
    };

    for (const Criterion& c : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = c.check(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        record(c.number, c.title, ok, detail);
    }

    if (failures != 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all 9 acceptance criteria passed\n");
    return 0;
}

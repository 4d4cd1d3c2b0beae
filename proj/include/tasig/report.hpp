#pragma once

#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "tasig/candlestick.hpp"
#include "tasig/indicators.hpp"
#include "tasig/series.hpp"
#include "tasig/significance.hpp"
#include "tasig/trend.hpp"

namespace tasig {

enum class InputKind { raw, ohlc };
enum class OutputFormat { json, csv, text };

InputKind input_kind_from_string(std::string_view s);
OutputFormat output_format_from_string(std::string_view s);

// Full pipeline configuration. CLI flags map onto these fields one-to-one.
struct RunConfig {
    std::string input_path;
    InputKind input_kind = InputKind::raw;
    Period period = Period::month;
    IndicatorConfig indicator;
    PatternConfig pattern;
    int horizon = 6;
    int min_signals = 3;
    std::vector<SignalKind> enabled_kinds{kAllSignalKinds.begin(), kAllSignalKinds.end()};
    bool use_heikin_ashi = true; // scan patterns on the Heikin Ashi series
    bool rsi_relative = false;   // normalize RSI gains/losses by the close
    std::string output_dir = "out";
    std::set<OutputFormat> formats{OutputFormat::json, OutputFormat::csv, OutputFormat::text};
    std::string label;      // defaults to the input file stem
    std::string market_tag; // optional dataset annotation
};

void validate(const RunConfig& config);

// Everything the pipeline computes for one input, before emission.
struct AnalysisResult {
    CandleSeries candles;                   // analyzed (plain) candles
    std::optional<CandleSeries> heikin;     // present when enabled
    IndicatorSeries macd_line;
    IndicatorSeries signal_line;
    IndicatorSeries rsi_series;
    std::vector<Signal> signals;            // enabled kinds, sorted
    SignificanceReport significance;
    std::vector<ForecastWindow> forecasts;
    TrendLine trend;
    int trend_points = 0; // observations entering the trend fit
};

/// Runs ingestion, indicators, pattern/crossing detection and the
/// significance evaluation without touching the filesystem output side.
AnalysisResult analyze(const RunConfig& config);

struct RunResult {
    AnalysisResult analysis;
    std::vector<std::filesystem::path> written;
};

/// Full pipeline: analyze() plus report emission into output_dir. Emits
/// candles.csv, indicators.csv, signals.json, significance.json,
/// significance.txt, forecasts.json and trend.json (filtered by `formats`).
/// Nothing is written until the whole analysis has succeeded.
RunResult run(const RunConfig& config);

// Deterministic renderings. JSON files are nlohmann dumps with 2-space
// indent and sorted keys; the text table mirrors the JSON p-values at the
// format_p_value precision.
std::string signals_to_json(const RunConfig& config, const AnalysisResult& result);
std::string significance_to_json(const RunConfig& config, const AnalysisResult& result);
std::string significance_to_text(const AnalysisResult& result);
std::string forecasts_to_json(const RunConfig& config, const AnalysisResult& result);
std::string trend_to_json(const RunConfig& config, const AnalysisResult& result);
std::string candles_to_csv(const AnalysisResult& result);
std::string indicators_to_csv(const AnalysisResult& result);

/// p-value formatting: scientific with 4 significant digits below 1e-4,
/// fixed 4 decimals otherwise.
std::string format_p_value(double p);

/// Significance verdict threshold (p <= alpha reads "significant").
inline constexpr double kSignificanceAlpha = 0.05;

/// Reads a whole file; throws IoError on failure.
std::string read_file(const std::filesystem::path& path);

} // namespace tasig

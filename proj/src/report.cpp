#include "tasig/report.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "tasig/csv.hpp"
#include "tasig/errors.hpp"

namespace tasig {

using nlohmann::json;

InputKind input_kind_from_string(std::string_view s) {
    if (s == "raw") return InputKind::raw;
    if (s == "ohlc") return InputKind::ohlc;
    throw ValidationError("report: unknown input kind '" + std::string(s) +
                          "' (expected raw or ohlc)");
}

OutputFormat output_format_from_string(std::string_view s) {
    if (s == "json") return OutputFormat::json;
    if (s == "csv") return OutputFormat::csv;
    if (s == "text") return OutputFormat::text;
    throw ValidationError("report: unknown output format '" + std::string(s) +
                          "' (expected json, csv or text)");
}

void validate(const RunConfig& config) {
    if (config.input_path.empty())
        throw ValidationError("report: input path must not be empty");
    if (config.horizon < 1)
        throw ValidationError("report: horizon must be >= 1");
    if (config.min_signals < 3)
        throw ValidationError("report: min_signals must be >= 3");
    if (config.enabled_kinds.empty())
        throw ValidationError("report: enabled signal kinds must not be empty");
    if (config.formats.empty())
        throw ValidationError("report: output formats must not be empty");
    if (config.output_dir.empty())
        throw ValidationError("report: output directory must not be empty");
    validate(config.indicator);
    validate(config.pattern);
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("report: cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad())
        throw IoError("report: error reading '" + path.string() + "'");
    return std::move(buf).str();
}

std::string format_p_value(double p) {
    char buf[32];
    if (p < 1e-4)
        std::snprintf(buf, sizeof(buf), "%.3e", p);
    else
        std::snprintf(buf, sizeof(buf), "%.4f", p);
    return buf;
}

namespace {

bool kind_enabled(const RunConfig& config, SignalKind kind) {
    for (SignalKind k : config.enabled_kinds)
        if (k == kind)
            return true;
    return false;
}

std::string default_label(const RunConfig& config) {
    if (!config.label.empty())
        return config.label;
    return std::filesystem::path(config.input_path).stem().string();
}

json config_snapshot(const RunConfig& config) {
    json indicator = {
        {"rsi_period", config.indicator.rsi_period},
        {"rsi_upper", config.indicator.rsi_upper},
        {"rsi_lower", config.indicator.rsi_lower},
        {"macd_fast", config.indicator.macd_fast},
        {"macd_slow", config.indicator.macd_slow},
        {"macd_signal_period", config.indicator.macd_signal_period},
    };
    json pattern = {
        {"shadow_body_ratio", config.pattern.shadow_body_ratio},
        {"upper_shadow_cap", config.pattern.upper_shadow_cap},
        {"trend_lookback", config.pattern.trend_lookback},
        {"body_epsilon", config.pattern.body_epsilon},
    };
    json kinds = json::array();
    for (SignalKind k : config.enabled_kinds)
        kinds.push_back(std::string(to_string(k)));
    return json{
        {"input_kind", config.input_kind == InputKind::raw ? "raw" : "ohlc"},
        {"period", std::string(to_string(config.period))},
        {"horizon", config.horizon},
        {"min_signals", config.min_signals},
        {"use_heikin_ashi", config.use_heikin_ashi},
        {"rsi_relative", config.rsi_relative},
        {"indicator", indicator},
        {"pattern", pattern},
        {"enabled_kinds", kinds},
    };
}

std::string dump(const json& j) {
    return j.dump(2) + "\n";
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("report: cannot write '" + path.string() + "'");
    out << content;
    out.flush();
    if (!out)
        throw IoError("report: error writing '" + path.string() + "'");
}

std::string_view method_name(PvalueMethod m) {
    return m == PvalueMethod::exact ? "exact" : "normal-approximation";
}

std::string_view alternative_name(Alternative a) {
    return a == Alternative::greater ? "greater" : "less";
}

std::string verdict_of(const SignificanceRow& row) {
    if (row.status != RowStatus::ok)
        return std::string(to_string(row.status));
    return row.test->p_value <= kSignificanceAlpha ? "significant" : "not significant";
}

} // namespace

AnalysisResult analyze(const RunConfig& config) {
    validate(config);
    std::string text = read_file(config.input_path);
    std::string label = default_label(config);

    AnalysisResult result;
    if (config.input_kind == InputKind::raw) {
        RawSeries raw = parse_raw_csv(text, label);
        raw.market_tag = config.market_tag;
        result.candles = resample(raw, config.period);
        result.trend = linear_trend(raw);
        result.trend_points = int(raw.points.size());
    } else {
        result.candles = parse_ohlc_csv(text, label, config.period);
        std::vector<double> closes = closes_of(result.candles);
        result.trend = linear_trend(closes);
        result.trend_points = int(closes.size());
    }

    std::vector<double> closes = closes_of(result.candles);
    auto [macd_line, signal_line] = macd(closes, config.indicator);
    result.macd_line = std::move(macd_line);
    result.signal_line = std::move(signal_line);
    RsiGainMode mode = config.rsi_relative ? RsiGainMode::relative_change
                                           : RsiGainMode::absolute_change;
    result.rsi_series = rsi(closes, config.indicator.rsi_period, mode);

    if (config.use_heikin_ashi)
        result.heikin = heikin_ashi(result.candles);

    // Patterns are scanned on the Heikin Ashi series when enabled; the trend
    // context always uses the plain closes.
    const CandleSeries& scan_series = result.heikin ? *result.heikin : result.candles;
    std::vector<Signal> all = detect_patterns(scan_series, config.pattern, closes);
    for (const Signal& s : macd_crossovers(result.macd_line, result.signal_line))
        all.push_back(s);
    for (const Signal& s : rsi_threshold_signals(result.rsi_series, config.indicator))
        all.push_back(s);

    for (const Signal& s : all)
        if (kind_enabled(config, s.kind))
            result.signals.push_back(s);
    sort_signals(result.signals);

    result.significance = evaluate_signals(result.candles, result.signals, config.horizon,
                                           config.min_signals, config.enabled_kinds);
    result.significance.market_tag = config.market_tag;
    result.forecasts = forecast_windows(result.candles, result.signals, config.horizon);
    return result;
}

std::string signals_to_json(const RunConfig& config, const AnalysisResult& result) {
    json signals = json::array();
    for (const Signal& s : result.signals) {
        signals.push_back(json{
            {"kind", std::string(to_string(s.kind))},
            {"direction", std::string(to_string(direction_of(s.kind)))},
            {"index", s.index},
            {"date", format_date(result.candles.candles[s.index].start)},
        });
    }
    return dump(json{
        {"label", result.candles.label},
        {"period", std::string(to_string(config.period))},
        {"signals", signals},
    });
}

std::string significance_to_json(const RunConfig& config, const AnalysisResult& result) {
    const SignificanceReport& report = result.significance;
    json rows = json::array();
    for (const SignificanceRow& row : report.rows) {
        json r{
            {"kind", std::string(to_string(row.kind))},
            {"direction", std::string(to_string(direction_of(row.kind)))},
            {"signals", row.signal_count},
            {"used", row.used},
            {"skipped", row.skipped},
            {"horizon", report.horizon},
            {"status", std::string(to_string(row.status))},
            {"verdict", verdict_of(row)},
        };
        if (row.test) {
            r["wilcoxon"] = json{
                {"n", row.test->n},
                {"w_plus", row.test->w_plus},
                {"p_value", row.test->p_value},
                {"method", std::string(method_name(row.test->method))},
                {"alternative", std::string(alternative_name(row.test->alternative))},
            };
        } else {
            r["wilcoxon"] = nullptr;
        }
        rows.push_back(std::move(r));
    }
    return dump(json{
        {"label", report.label},
        {"market_tag", report.market_tag},
        {"period", std::string(to_string(report.period))},
        {"horizon", report.horizon},
        {"min_signals", report.min_signals},
        {"generated_at", report.generated_at},
        {"config", config_snapshot(config)},
        {"rows", rows},
    });
}

std::string significance_to_text(const AnalysisResult& result) {
    const SignificanceReport& report = result.significance;
    std::ostringstream out;
    out << "significance report: " << report.label << "\n";
    if (!report.market_tag.empty())
        out << "market: " << report.market_tag << "\n";
    out << "period: " << to_string(report.period) << "   horizon: " << report.horizon
        << "   min_signals: " << report.min_signals << "\n";
    out << "generated: " << report.generated_at << "\n\n";

    char line[160];
    std::snprintf(line, sizeof(line), "%-19s %-9s %8s %5s %8s  %-11s %-21s %s\n", "indicator",
                  "direction", "signals", "used", "skipped", "p-value", "method", "verdict");
    out << line;
    out << std::string(96, '-') << "\n";
    for (const SignificanceRow& row : report.rows) {
        std::string p = row.test ? format_p_value(row.test->p_value) : "-";
        std::string method = row.test ? std::string(method_name(row.test->method)) : "-";
        std::snprintf(line, sizeof(line), "%-19s %-9s %8d %5d %8d  %-11s %-21s %s\n",
                      std::string(to_string(row.kind)).c_str(),
                      std::string(to_string(direction_of(row.kind))).c_str(), row.signal_count,
                      row.used, row.skipped, p.c_str(), method.c_str(), verdict_of(row).c_str());
        out << line;
    }
    return out.str();
}

std::string forecasts_to_json(const RunConfig& config, const AnalysisResult& result) {
    json windows = json::array();
    for (const ForecastWindow& w : result.forecasts) {
        windows.push_back(json{
            {"kind", std::string(to_string(w.kind))},
            {"direction", std::string(to_string(direction_of(w.kind)))},
            {"start", w.start},
            {"end", w.end},
            {"start_date", format_date(result.candles.candles[w.start].start)},
            {"end_date", format_date(result.candles.candles[w.end].start)},
            {"truncated", w.truncated},
        });
    }
    return dump(json{
        {"label", result.candles.label},
        {"period", std::string(to_string(config.period))},
        {"horizon", config.horizon},
        {"windows", windows},
    });
}

std::string trend_to_json(const RunConfig& config, const AnalysisResult& result) {
    return dump(json{
        {"label", result.candles.label},
        {"basis", config.input_kind == InputKind::raw ? "raw_observations" : "candle_closes"},
        {"n_points", result.trend_points},
        {"slope", result.trend.slope},
        {"intercept", result.trend.intercept},
        {"r_squared", result.trend.r_squared},
    });
}

std::string candles_to_csv(const AnalysisResult& result) {
    std::string out = "series,start,end,open,high,low,close,n_obs\n";
    auto append = [&out](std::string_view name, const CandleSeries& series) {
        for (const Candle& c : series.candles) {
            out += name;
            out += ',';
            out += format_date(c.start);
            out += ',';
            out += format_date(c.end);
            for (double v : {c.open, c.high, c.low, c.close}) {
                out += ',';
                out += format_value(v);
            }
            out += ',';
            out += std::to_string(c.n_obs);
            out += '\n';
        }
    };
    append("raw", result.candles);
    if (result.heikin)
        append("heikin_ashi", *result.heikin);
    return out;
}

std::string indicators_to_csv(const AnalysisResult& result) {
    std::string out = "kind,index,value\n";
    char buf[80];
    auto append = [&](const IndicatorSeries& series) {
        for (const IndicatorPoint& p : series.points) {
            std::snprintf(buf, sizeof(buf), "%s,%zu,%.6f\n",
                          std::string(to_string(series.kind)).c_str(), p.index, p.value);
            out += buf;
        }
    };
    append(result.macd_line);
    append(result.signal_line);
    append(result.rsi_series);
    return out;
}

RunResult run(const RunConfig& config) {
    RunResult result{analyze(config), {}};

    std::filesystem::path dir(config.output_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec)
        throw IoError("report: cannot create output directory '" + dir.string() + "': " +
                      ec.message());

    auto emit = [&](OutputFormat format, const char* name, const std::string& content) {
        if (!config.formats.count(format))
            return;
        std::filesystem::path path = dir / name;
        write_file(path, content);
        result.written.push_back(path);
    };

    emit(OutputFormat::csv, "candles.csv", candles_to_csv(result.analysis));
    emit(OutputFormat::csv, "indicators.csv", indicators_to_csv(result.analysis));
    emit(OutputFormat::json, "signals.json", signals_to_json(config, result.analysis));
    emit(OutputFormat::json, "significance.json", significance_to_json(config, result.analysis));
    emit(OutputFormat::text, "significance.txt", significance_to_text(result.analysis));
    emit(OutputFormat::json, "forecasts.json", forecasts_to_json(config, result.analysis));
    emit(OutputFormat::json, "trend.json", trend_to_json(config, result.analysis));
    return result;
}

} // namespace tasig

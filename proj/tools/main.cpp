#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "tasig/csv.hpp"
#include "tasig/errors.hpp"
#include "tasig/report.hpp"
#include "tasig/wilcoxon.hpp"

namespace {

struct AnalyzeArgs {
    tasig::RunConfig config;
    std::string input_kind = "raw";
    std::string period = "month";
    std::vector<std::string> kinds;
    std::vector<std::string> formats;
};

void add_analyze(CLI::App& app, AnalyzeArgs& args) {
    CLI::App* cmd = app.add_subcommand("analyze", "Run the full pipeline and emit reports");
    cmd->fallthrough(); // lets the root --config appear after the subcommand
    cmd->add_option("--input", args.config.input_path, "Input CSV file")->required();
    cmd->add_option("--input-kind", args.input_kind, "Input schema: raw or ohlc")
        ->capture_default_str();
    cmd->add_option("--period", args.period, "Candle period: week, month or year")
        ->capture_default_str();
    cmd->add_option("--horizon", args.config.horizon, "Forward-return horizon in candles")
        ->capture_default_str();
    cmd->add_option("--min-signals", args.config.min_signals,
                    "Minimum usable returns for a p-value")
        ->capture_default_str();
    cmd->add_flag("--heikin-ashi,!--no-heikin-ashi", args.config.use_heikin_ashi,
                  "Scan patterns on Heikin Ashi candles (default on)");
    cmd->add_flag("--rsi-relative", args.config.rsi_relative,
                  "Normalize RSI gains/losses by the close");
    cmd->add_option("--rsi-period", args.config.indicator.rsi_period, "RSI smoothing period")
        ->capture_default_str();
    cmd->add_option("--rsi-upper", args.config.indicator.rsi_upper, "RSI bearish threshold")
        ->capture_default_str();
    cmd->add_option("--rsi-lower", args.config.indicator.rsi_lower, "RSI bullish threshold")
        ->capture_default_str();
    cmd->add_option("--macd-fast", args.config.indicator.macd_fast, "Fast EMA period")
        ->capture_default_str();
    cmd->add_option("--macd-slow", args.config.indicator.macd_slow, "Slow EMA period")
        ->capture_default_str();
    cmd->add_option("--macd-signal-period", args.config.indicator.macd_signal_period,
                    "Signal-line EMA period")
        ->capture_default_str();
    cmd->add_option("--shadow-body-ratio", args.config.pattern.shadow_body_ratio,
                    "Minimum lower-shadow / body ratio for hammer shapes")
        ->capture_default_str();
    cmd->add_option("--upper-shadow-cap", args.config.pattern.upper_shadow_cap,
                    "Maximum upper-shadow / body ratio for hammer shapes")
        ->capture_default_str();
    cmd->add_option("--trend-lookback", args.config.pattern.trend_lookback,
                    "Candles back for the trend context")
        ->capture_default_str();
    cmd->add_option("--body-epsilon", args.config.pattern.body_epsilon,
                    "Minimum body as a fraction of the candle range")
        ->capture_default_str();
    cmd->add_option("--kinds", args.kinds, "Signal kinds to evaluate (default: all)")
        ->delimiter(',');
    cmd->add_option("--formats", args.formats, "Output formats: json, csv, text (default: all)")
        ->delimiter(',');
    cmd->add_option("--output-dir", args.config.output_dir, "Report output directory")
        ->capture_default_str();
    cmd->add_option("--label", args.config.label, "Dataset label (default: input file stem)");
    cmd->add_option("--market-tag", args.config.market_tag,
                    "Free-text market annotation, e.g. stable or volatile");

    cmd->callback([&args]() {
        args.config.input_kind = tasig::input_kind_from_string(args.input_kind);
        args.config.period = tasig::period_from_string(args.period);
        if (!args.kinds.empty()) {
            args.config.enabled_kinds.clear();
            for (const std::string& name : args.kinds)
                args.config.enabled_kinds.push_back(tasig::signal_kind_from_string(name));
        }
        if (!args.formats.empty()) {
            args.config.formats.clear();
            for (const std::string& name : args.formats)
                args.config.formats.insert(tasig::output_format_from_string(name));
        }
        tasig::RunResult result = tasig::run(args.config);
        for (const auto& path : result.written)
            std::cout << "wrote " << path.string() << "\n";
    });
}

struct IngestArgs {
    std::string input;
    std::string kind = "raw";
    std::string period = "month";
    std::string label;
    std::string output = "-";
};

void add_ingest(CLI::App& app, IngestArgs& args) {
    CLI::App* cmd = app.add_subcommand("ingest", "Parse and resample a CSV into candles");
    cmd->add_option("--input", args.input, "Input CSV file")->required();
    cmd->add_option("--kind", args.kind, "Input schema: raw or ohlc")->capture_default_str();
    cmd->add_option("--period", args.period, "Candle period: week, month or year")
        ->capture_default_str();
    cmd->add_option("--label", args.label, "Dataset label (default: input file stem)");
    cmd->add_option("--output", args.output, "Output file, '-' for stdout")
        ->capture_default_str();

    cmd->callback([&args]() {
        tasig::Period period = tasig::period_from_string(args.period);
        std::string text = tasig::read_file(args.input);
        std::string label =
            args.label.empty() ? std::filesystem::path(args.input).stem().string() : args.label;

        tasig::CandleSeries candles;
        if (tasig::input_kind_from_string(args.kind) == tasig::InputKind::raw)
            candles = tasig::resample(tasig::parse_raw_csv(text, label), period);
        else
            candles = tasig::parse_ohlc_csv(text, label, period);

        std::string csv = tasig::to_csv(candles);
        if (args.output == "-") {
            std::cout << csv;
        } else {
            std::ofstream out(args.output, std::ios::binary | std::ios::trunc);
            if (!out)
                throw tasig::IoError("report: cannot write '" + args.output + "'");
            out << csv;
        }
    });
}

struct WilcoxonArgs {
    std::string input;
    std::string alternative = "greater";
    bool as_json = false;
};

std::vector<double> read_diff_file(const std::string& path) {
    std::string text = tasig::read_file(path);
    std::vector<double> diffs;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line(text.data() + pos,
                              (nl == std::string::npos ? text.size() : nl) - pos);
        pos = nl == std::string::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (line.empty() || line.front() == '#')
            continue;
        double v = 0.0;
        auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), v);
        if (ec != std::errc{} || ptr != line.data() + line.size())
            throw tasig::ValidationError("significance: line " + std::to_string(line_no) +
                                         ": malformed number '" + std::string(line) + "'");
        diffs.push_back(v);
    }
    return diffs;
}

void add_wilcoxon(CLI::App& app, WilcoxonArgs& args) {
    CLI::App* cmd = app.add_subcommand(
        "wilcoxon", "One-sided signed-rank test on a file of differences (one per line)");
    cmd->add_option("--input", args.input, "File of differences, one per line, '#' comments")
        ->required();
    cmd->add_option("--alternative", args.alternative, "greater (median > 0) or less (median < 0)")
        ->capture_default_str();
    cmd->add_flag("--json", args.as_json, "Emit the result as JSON");

    cmd->callback([&args]() {
        tasig::Alternative alt;
        if (args.alternative == "greater")
            alt = tasig::Alternative::greater;
        else if (args.alternative == "less")
            alt = tasig::Alternative::less;
        else
            throw tasig::ValidationError("significance: unknown alternative '" +
                                         args.alternative + "' (expected greater or less)");

        std::vector<double> diffs = read_diff_file(args.input);
        tasig::WilcoxonResult result = tasig::wilcoxon_signed_rank(diffs, alt);
        const char* method =
            result.method == tasig::PvalueMethod::exact ? "exact" : "normal-approximation";
        if (args.as_json) {
            nlohmann::json j{
                {"n", result.n},
                {"w_plus", result.w_plus},
                {"p_value", result.p_value},
                {"method", method},
                {"alternative", args.alternative},
            };
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "n: " << result.n << "\n"
                      << "w_plus: " << result.w_plus << "\n"
                      << "method: " << method << "\n"
                      << "alternative: " << args.alternative << "\n"
                      << "p_value: " << tasig::format_p_value(result.p_value) << "\n";
        }
    });
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"tasig: candlestick, MACD and RSI signal analysis with "
                 "Wilcoxon significance reports"};
    app.require_subcommand(1);
    app.set_config("--config", "",
                   "INI/TOML key-value file; analyze options go in an [analyze] "
                   "section and are overridden by flags");

    AnalyzeArgs analyze_args;
    IngestArgs ingest_args;
    WilcoxonArgs wilcoxon_args;
    add_analyze(app, analyze_args);
    add_ingest(app, ingest_args);
    add_wilcoxon(app, wilcoxon_args);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const tasig::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const tasig::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

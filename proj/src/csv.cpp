#include "tasig/csv.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>

#include "tasig/errors.hpp"

namespace tasig {

std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

namespace {

// Physical line with its 1-based number; CR stripped, empty lines dropped.
struct Line {
    std::size_t number;
    std::string_view text;
};

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    while (!text.empty()) {
        ++number;
        std::size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        if (!line.empty())
            lines.push_back({number, line});
    }
    return lines;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    while (true) {
        std::size_t comma = line.find(',');
        fields.push_back(line.substr(0, comma));
        if (comma == std::string_view::npos)
            break;
        line = line.substr(comma + 1);
    }
    return fields;
}

[[noreturn]] void fail_line(std::size_t number, const std::string& what) {
    throw ValidationError("ingest: line " + std::to_string(number) + ": " + what);
}

double parse_number(std::string_view s, std::size_t line_number) {
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        fail_line(line_number, "malformed number '" + std::string(s) + "'");
    return v;
}

Date parse_date_field(std::string_view s, std::size_t line_number) {
    try {
        return parse_date(s);
    } catch (const ValidationError& e) {
        fail_line(line_number, e.what());
    }
}

void require_header(const std::vector<Line>& lines, std::string_view expected) {
    if (lines.empty())
        throw ValidationError("ingest: empty input, expected header '" + std::string(expected) + "'");
    if (lines.front().text != expected)
        fail_line(lines.front().number,
                  "expected header '" + std::string(expected) + "', got '" +
                      std::string(lines.front().text) + "'");
}

} // namespace

RawSeries parse_raw_csv(std::string_view text, std::string_view label) {
    std::vector<Line> lines = split_lines(text);
    require_header(lines, "date,value");

    RawSeries series;
    series.label = label;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        std::vector<std::string_view> fields = split_fields(line.text);
        if (fields.size() != 2)
            fail_line(line.number, "expected 2 fields, got " + std::to_string(fields.size()));
        RawPoint p;
        p.date = parse_date_field(fields[0], line.number);
        p.value = parse_number(fields[1], line.number);
        if (!std::isfinite(p.value) || p.value <= 0.0)
            fail_line(line.number, "non-positive or non-finite value '" + std::string(fields[1]) + "'");
        series.points.push_back(p);
    }

    std::stable_sort(series.points.begin(), series.points.end(),
                     [](const RawPoint& a, const RawPoint& b) { return a.date < b.date; });
    for (std::size_t i = 1; i < series.points.size(); ++i)
        if (series.points[i - 1].date == series.points[i].date)
            throw ValidationError("ingest: duplicate date " + format_date(series.points[i].date));

    validate(series);
    return series;
}

CandleSeries parse_ohlc_csv(std::string_view text, std::string_view label, Period period) {
    std::vector<Line> lines = split_lines(text);
    require_header(lines, "date,open,high,low,close");

    CandleSeries series;
    series.period = period;
    series.label = label;
    std::int64_t prev_bucket = 0;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        std::vector<std::string_view> fields = split_fields(line.text);
        if (fields.size() != 5)
            fail_line(line.number, "expected 5 fields, got " + std::to_string(fields.size()));
        Candle c;
        c.start = c.end = parse_date_field(fields[0], line.number);
        c.open = parse_number(fields[1], line.number);
        c.high = parse_number(fields[2], line.number);
        c.low = parse_number(fields[3], line.number);
        c.close = parse_number(fields[4], line.number);
        c.n_obs = 1;
        validate(c, "ingest: line " + std::to_string(line.number));

        if (!series.candles.empty()) {
            if (!(series.candles.back().start < c.start))
                fail_line(line.number, "dates not strictly increasing");
            if (bucket_id(c.start, period) == prev_bucket)
                fail_line(line.number, "two rows in the same " + std::string(to_string(period)) +
                                           " bucket");
        }
        prev_bucket = bucket_id(c.start, period);
        series.candles.push_back(c);
    }

    validate(series);
    return series;
}

std::string to_csv(const RawSeries& series) {
    std::string out = "date,value\n";
    for (const RawPoint& p : series.points) {
        out += format_date(p.date);
        out += ',';
        out += format_value(p.value);
        out += '\n';
    }
    return out;
}

std::string to_csv(const CandleSeries& series) {
    std::string out = "start,end,open,high,low,close,n_obs\n";
    for (const Candle& c : series.candles) {
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
    return out;
}

} // namespace tasig

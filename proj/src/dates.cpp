#include "tasig/dates.hpp"

#include <charconv>
#include <cstdio>

#include "tasig/errors.hpp"

namespace tasig {

std::string_view to_string(Period p) {
    switch (p) {
    case Period::week: return "week";
    case Period::month: return "month";
    case Period::year: return "year";
    }
    return "?";
}

Period period_from_string(std::string_view s) {
    if (s == "week") return Period::week;
    if (s == "month") return Period::month;
    if (s == "year") return Period::year;
    throw ValidationError("unknown period '" + std::string(s) + "' (expected week, month or year)");
}

namespace {

bool parse_int_field(std::string_view s, int& out) {
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && ptr == s.data() + s.size();
}

} // namespace

Date parse_date(std::string_view text) {
    int y = 0, m = 0, d = 0;
    bool ok = text.size() == 10 && text[4] == '-' && text[7] == '-' &&
              parse_int_field(text.substr(0, 4), y) &&
              parse_int_field(text.substr(5, 2), m) &&
              parse_int_field(text.substr(8, 2), d);
    if (ok) {
        Date date = std::chrono::year{y} / std::chrono::month{unsigned(m)} /
                    std::chrono::day{unsigned(d)};
        if (date.ok())
            return date;
    }
    throw ValidationError("invalid date '" + std::string(text) + "' (expected YYYY-MM-DD)");
}

std::string format_date(Date d) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", int(d.year()), unsigned(d.month()),
                  unsigned(d.day()));
    return buf;
}

std::chrono::sys_days iso_week_monday(std::chrono::sys_days d) {
    std::chrono::weekday wd{d};
    return d - std::chrono::days{wd.iso_encoding() - 1};
}

std::int64_t bucket_id(Date d, Period period) {
    switch (period) {
    case Period::week:
        return iso_week_monday(std::chrono::sys_days{d}).time_since_epoch().count();
    case Period::month:
        return std::int64_t{int(d.year())} * 12 + (unsigned(d.month()) - 1);
    case Period::year:
        return int(d.year());
    }
    throw ValidationError("invalid period");
}

} // namespace tasig

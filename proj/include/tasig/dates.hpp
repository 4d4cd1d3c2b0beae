#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <string_view>

namespace tasig {

using Date = std::chrono::year_month_day;

// Calendar bucketing granularity for resampling.
enum class Period { week, month, year };

std::string_view to_string(Period p);
Period period_from_string(std::string_view s);

/// Parses a strict ISO-8601 calendar date (YYYY-MM-DD). Throws ValidationError.
Date parse_date(std::string_view text);

/// Formats as YYYY-MM-DD.
std::string format_date(Date d);

/// Monday of the ISO week containing `d`.
std::chrono::sys_days iso_week_monday(std::chrono::sys_days d);

// Integer bucket identifier for a date under a period. Ids are strictly
// monotone in the date within one period, so consecutive sorted observations
// land in the same bucket exactly when their ids are equal.
//   week  -> days-since-epoch of the ISO-week Monday
//   month -> year*12 + (month-1)
//   year  -> year
std::int64_t bucket_id(Date d, Period period);

} // namespace tasig

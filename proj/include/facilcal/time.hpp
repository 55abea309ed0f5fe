#ifndef FACILCAL_TIME_HPP
#define FACILCAL_TIME_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "facilcal/types.hpp"

namespace facilcal {

/// Calendar date (proleptic Gregorian).
struct CivilDate {
    int year = 1970;
    int month = 1; // 1..12
    int day = 1;   // 1..31
    bool operator==(const CivilDate&) const = default;
};

/// Fixed offset from UTC in minutes (east positive). Daily schedulable
/// windows are interpreted in this offset; DST is out of scope.
struct UtcOffset {
    int minutes = 0;
};

std::int64_t days_from_civil(const CivilDate& d);
CivilDate civil_from_days(std::int64_t days);

/// Strict ISO-8601 instant: YYYY-MM-DDTHH:MM:SS followed by Z or +/-HH:MM.
std::optional<TimePoint> parse_iso8601(std::string_view text);

/// Formats as UTC with a trailing Z.
std::string format_iso8601(TimePoint t);

/// "YYYY-MM-DD"
std::optional<CivilDate> parse_date(std::string_view text);
std::string format_date(const CivilDate& d);

/// "HH:MM" or "HH:MM:SS", returned as seconds after midnight.
std::optional<std::int32_t> parse_time_of_day(std::string_view text);

/// "Z", "UTC", or +/-HH:MM.
std::optional<UtcOffset> parse_utc_offset(std::string_view text);

/// UTC instant of local midnight on the given date under the offset.
TimePoint utc_from_local(const CivilDate& date, std::int32_t seconds_of_day, UtcOffset tz);

} // namespace facilcal

#endif

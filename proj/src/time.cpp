#include "facilcal/time.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cstdio>

namespace facilcal {

namespace {

bool parse_fixed_int(std::string_view s, std::size_t pos, std::size_t len, int& out) {
    if (pos + len > s.size()) return false;
    int value = 0;
    for (std::size_t i = pos; i < pos + len; ++i) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (!std::isdigit(c)) return false;
        value = value * 10 + (c - '0');
    }
    out = value;
    return true;
}

bool is_leap(int y) {
    return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
}

int days_in_month(int y, int m) {
    static constexpr std::array<int, 12> lengths = {31, 28, 31, 30, 31, 30,
                                                    31, 31, 30, 31, 30, 31};
    if (m == 2 && is_leap(y)) return 29;
    return lengths[static_cast<std::size_t>(m - 1)];
}

} // namespace

// Howard Hinnant's civil-days algorithms.
std::int64_t days_from_civil(const CivilDate& d) {
    std::int64_t y = d.year;
    const int m = d.month;
    const int day = d.day;
    y -= m <= 2;
    const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
    const unsigned yoe = static_cast<unsigned>(y - era * 400);
    const unsigned doy = static_cast<unsigned>((153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + day - 1);
    const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
    return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

CivilDate civil_from_days(std::int64_t z) {
    z += 719468;
    const std::int64_t era = (z >= 0 ? z : z - 146096) / 146097;
    const unsigned doe = static_cast<unsigned>(z - era * 146097);
    const unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
    const std::int64_t y = static_cast<std::int64_t>(yoe) + era * 400;
    const unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
    const unsigned mp = (5 * doy + 2) / 153;
    const unsigned day = doy - (153 * mp + 2) / 5 + 1;
    const unsigned m = mp + (mp < 10 ? 3 : -9);
    return CivilDate{static_cast<int>(y + (m <= 2)), static_cast<int>(m), static_cast<int>(day)};
}

std::optional<TimePoint> parse_iso8601(std::string_view s) {
    // YYYY-MM-DDTHH:MM:SS(Z|+HH:MM|-HH:MM)
    if (s.size() < 20) return std::nullopt;
    int year, month, day, hour, minute, second;
    if (!parse_fixed_int(s, 0, 4, year) || s[4] != '-' ||
        !parse_fixed_int(s, 5, 2, month) || s[7] != '-' ||
        !parse_fixed_int(s, 8, 2, day) || (s[10] != 'T' && s[10] != 't') ||
        !parse_fixed_int(s, 11, 2, hour) || s[13] != ':' ||
        !parse_fixed_int(s, 14, 2, minute) || s[16] != ':' ||
        !parse_fixed_int(s, 17, 2, second))
        return std::nullopt;
    if (month < 1 || month > 12 || day < 1 || day > days_in_month(year, month)) return std::nullopt;
    if (hour > 23 || minute > 59 || second > 60) return std::nullopt;
    if (second == 60) second = 59; // leap seconds collapse

    std::string_view rest = s.substr(19);
    int offset_min = 0;
    if (rest == "Z" || rest == "z") {
        // UTC
    } else if (rest.size() == 6 && (rest[0] == '+' || rest[0] == '-') && rest[3] == ':') {
        int oh, om;
        if (!parse_fixed_int(rest, 1, 2, oh) || !parse_fixed_int(rest, 4, 2, om)) return std::nullopt;
        if (oh > 14 || om > 59) return std::nullopt;
        offset_min = oh * 60 + om;
        if (rest[0] == '-') offset_min = -offset_min;
    } else {
        return std::nullopt;
    }

    const std::int64_t days = days_from_civil(CivilDate{year, month, day});
    const std::int64_t local = days * 86400 + hour * 3600 + minute * 60 + second;
    return local - static_cast<std::int64_t>(offset_min) * 60;
}

std::string format_iso8601(TimePoint t) {
    std::int64_t days = t / 86400;
    std::int64_t sod = t % 86400;
    if (sod < 0) {
        sod += 86400;
        days -= 1;
    }
    const CivilDate d = civil_from_days(days);
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02dT%02d:%02d:%02dZ", d.year, d.month, d.day,
                  static_cast<int>(sod / 3600), static_cast<int>((sod % 3600) / 60),
                  static_cast<int>(sod % 60));
    return buf;
}

std::optional<CivilDate> parse_date(std::string_view s) {
    if (s.size() != 10) return std::nullopt;
    int year, month, day;
    if (!parse_fixed_int(s, 0, 4, year) || s[4] != '-' || !parse_fixed_int(s, 5, 2, month) ||
        s[7] != '-' || !parse_fixed_int(s, 8, 2, day))
        return std::nullopt;
    if (month < 1 || month > 12 || day < 1 || day > days_in_month(year, month)) return std::nullopt;
    return CivilDate{year, month, day};
}

std::string format_date(const CivilDate& d) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", d.year, d.month, d.day);
    return buf;
}

std::optional<std::int32_t> parse_time_of_day(std::string_view s) {
    int hour, minute, second = 0;
    if (s.size() == 5) {
        if (!parse_fixed_int(s, 0, 2, hour) || s[2] != ':' || !parse_fixed_int(s, 3, 2, minute))
            return std::nullopt;
    } else if (s.size() == 8) {
        if (!parse_fixed_int(s, 0, 2, hour) || s[2] != ':' || !parse_fixed_int(s, 3, 2, minute) ||
            s[5] != ':' || !parse_fixed_int(s, 6, 2, second))
            return std::nullopt;
    } else {
        return std::nullopt;
    }
    if (hour > 24 || minute > 59 || second > 59) return std::nullopt;
    if (hour == 24 && (minute != 0 || second != 0)) return std::nullopt;
    return hour * 3600 + minute * 60 + second;
}

std::optional<UtcOffset> parse_utc_offset(std::string_view s) {
    if (s == "Z" || s == "z" || s == "UTC" || s == "utc") return UtcOffset{0};
    if (s.size() == 6 && (s[0] == '+' || s[0] == '-') && s[3] == ':') {
        int oh, om;
        if (!parse_fixed_int(s, 1, 2, oh) || !parse_fixed_int(s, 4, 2, om)) return std::nullopt;
        if (oh > 14 || om > 59) return std::nullopt;
        int minutes = oh * 60 + om;
        if (s[0] == '-') minutes = -minutes;
        return UtcOffset{minutes};
    }
    return std::nullopt;
}

TimePoint utc_from_local(const CivilDate& date, std::int32_t seconds_of_day, UtcOffset tz) {
    return days_from_civil(date) * 86400 + seconds_of_day -
           static_cast<std::int64_t>(tz.minutes) * 60;
}

} // namespace facilcal

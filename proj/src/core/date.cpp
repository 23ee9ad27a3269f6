#include "arena/core/date.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>

#include "arena/core/errors.hpp"

namespace arena {

namespace {

int parse_fixed(std::string_view s, std::size_t pos, std::size_t len, std::string_view whole) {
    int value = 0;
    if (pos + len > s.size()) throw ParseError("truncated date/time: '" + std::string(whole) + "'");
    for (std::size_t i = pos; i < pos + len; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError("bad digit in date/time: '" + std::string(whole) + "'");
        value = value * 10 + (s[i] - '0');
    }
    return value;
}

} // namespace

Date Date::parse(std::string_view iso) {
    if (iso.size() != 10 || iso[4] != '-' || iso[7] != '-')
        throw ParseError("expected YYYY-MM-DD, got '" + std::string(iso) + "'");
    const int y = parse_fixed(iso, 0, 4, iso);
    const int m = parse_fixed(iso, 5, 2, iso);
    const int d = parse_fixed(iso, 8, 2, iso);
    const std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{static_cast<unsigned>(m)},
                                          std::chrono::day{static_cast<unsigned>(d)}};
    if (!ymd.ok()) throw ParseError("invalid calendar date '" + std::string(iso) + "'");
    return Date{std::chrono::sys_days{ymd}};
}

std::string Date::to_string() const {
    const std::chrono::year_month_day ymd{days_};
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                  static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
    return buf;
}

Timestamp parse_timestamp(std::string_view iso) {
    const Date day = Date::parse(iso.substr(0, std::min<std::size_t>(10, iso.size())));
    auto ts = std::chrono::time_point_cast<std::chrono::seconds>(day.sys_days());
    if (iso.size() == 10) return ts;
    if (iso[10] != 'T' && iso[10] != ' ')
        throw ParseError("expected 'T' separator in timestamp '" + std::string(iso) + "'");
    std::string_view rest = iso.substr(11);
    if (!rest.empty() && rest.back() == 'Z') rest.remove_suffix(1);
    if (rest.size() != 8 || rest[2] != ':' || rest[5] != ':')
        throw ParseError("expected HH:MM:SS in timestamp '" + std::string(iso) + "'");
    const int hh = parse_fixed(rest, 0, 2, iso);
    const int mm = parse_fixed(rest, 3, 2, iso);
    const int ss = parse_fixed(rest, 6, 2, iso);
    if (hh > 23 || mm > 59 || ss > 60) throw ParseError("time out of range in '" + std::string(iso) + "'");
    return ts + std::chrono::hours{hh} + std::chrono::minutes{mm} + std::chrono::seconds{ss};
}

std::string format_timestamp(Timestamp ts) {
    const auto day = std::chrono::floor<std::chrono::days>(ts);
    const std::chrono::hh_mm_ss tod{ts - day};
    char buf[32];
    std::snprintf(buf, sizeof buf, "%sT%02d:%02d:%02dZ", Date{day}.to_string().c_str(),
                  static_cast<int>(tod.hours().count()), static_cast<int>(tod.minutes().count()),
                  static_cast<int>(tod.seconds().count()));
    return buf;
}

} // namespace arena

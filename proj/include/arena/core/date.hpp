#pragma once

#include <chrono>
#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace arena {

/// Calendar date (UTC), stored as days since the Unix epoch.
class Date {
public:
    constexpr Date() = default;
    constexpr explicit Date(std::chrono::sys_days d) : days_(d) {}
    constexpr Date(int y, unsigned m, unsigned d)
        : days_(std::chrono::year_month_day{std::chrono::year{y}, std::chrono::month{m},
                                            std::chrono::day{d}}) {}

    /// Parses `YYYY-MM-DD`. Throws ParseError on anything else.
    static Date parse(std::string_view iso);

    std::string to_string() const;

    constexpr std::chrono::sys_days sys_days() const { return days_; }
    constexpr std::int64_t serial() const { return days_.time_since_epoch().count(); }
    constexpr bool is_weekend() const {
        const std::chrono::weekday wd{days_};
        return wd == std::chrono::Saturday || wd == std::chrono::Sunday;
    }

    constexpr Date operator+(int n) const { return Date{days_ + std::chrono::days{n}}; }
    constexpr Date operator-(int n) const { return Date{days_ - std::chrono::days{n}}; }
    constexpr std::int64_t operator-(Date other) const { return (days_ - other.days_).count(); }

    friend constexpr auto operator<=>(Date, Date) = default;

private:
    std::chrono::sys_days days_{};
};

using Timestamp = std::chrono::sys_seconds;

/// Parses `YYYY-MM-DDTHH:MM:SSZ` (the trailing Z is optional) or a bare date
/// (midnight UTC).
Timestamp parse_timestamp(std::string_view iso);
std::string format_timestamp(Timestamp ts);

/// Last second of the given UTC day.
inline Timestamp end_of_day(Date d) {
    return std::chrono::time_point_cast<std::chrono::seconds>(d.sys_days()) + std::chrono::hours{24} -
           std::chrono::seconds{1};
}

inline Date date_of(Timestamp ts) { return Date{std::chrono::floor<std::chrono::days>(ts)}; }

} // namespace arena

template <>
struct std::hash<arena::Date> {
    std::size_t operator()(arena::Date d) const noexcept { return std::hash<std::int64_t>{}(d.serial()); }
};

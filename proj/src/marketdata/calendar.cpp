#include "arena/marketdata/calendar.hpp"

#include <algorithm>

#include "arena/core/errors.hpp"

namespace arena::marketdata {

bool TradingCalendar::contains(Date d) const {
    return std::binary_search(dates.begin(), dates.end(), d);
}

TradingCalendar calendar(AssetClass asset_class, Date start, Date end, const std::set<Date>& holidays) {
    if (start > end) throw RangeError("calendar start " + start.to_string() + " is after end " + end.to_string());
    TradingCalendar cal{asset_class, {}};
    for (Date d = start; d <= end; d = d + 1) {
        if (asset_class == AssetClass::Equity && (d.is_weekend() || holidays.count(d))) continue;
        cal.dates.push_back(d);
    }
    return cal;
}

} // namespace arena::marketdata

#pragma once

#include <set>
#include <vector>

#include "arena/core/date.hpp"
#include "arena/marketdata/asset.hpp"

namespace arena::marketdata {

struct TradingCalendar {
    AssetClass asset_class = AssetClass::Equity;
    std::vector<Date> dates;  // strictly increasing

    bool contains(Date d) const;
};

/// Crypto trades every calendar day; equities trade weekdays minus `holidays`.
/// Throws RangeError when start > end.
TradingCalendar calendar(AssetClass asset_class, Date start, Date end, const std::set<Date>& holidays = {});

} // namespace arena::marketdata

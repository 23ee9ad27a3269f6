#pragma once

#include <span>
#include <string>
#include <string_view>

#include "arena/core/date.hpp"
#include "arena/marketdata/news.hpp"

namespace arena::briefing {

/// Appears in the no-news prompt variant.
inline constexpr std::string_view kNoNewsMarker = "No articles were provided";

/// Renders the summarization prompt for one asset and day. Articles are
/// deduplicated and listed as title + body in dedup order. An empty list
/// renders the no-news variant.
std::string build_summary_prompt(std::string_view symbol, Date date, std::span<const marketdata::NewsItem> articles);

} // namespace arena::briefing

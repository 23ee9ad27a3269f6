#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "arena/core/date.hpp"
#include "arena/marketdata/asset.hpp"

namespace arena::briefing {

enum class Sentiment { Bullish, Neutral, Bearish };

std::string_view to_string(Sentiment s);
Sentiment sentiment_from_string(std::string_view s);

/// Verified per-asset, per-day news summary delivered to every agent.
struct DailyBrief {
    marketdata::AssetId asset;
    Date date;
    std::string summary;
    std::vector<std::string> themes;
    Sentiment sentiment = Sentiment::Neutral;
    std::vector<std::string> source_item_ids;

    friend bool operator==(const DailyBrief&, const DailyBrief&) = default;
};

/// Pulls the `Themes:` and `Sentiment:` label lines out of a summarizer reply.
/// The last occurrence of each wins; a missing or unrecognized sentiment
/// label yields Neutral.
struct ReplyLabels {
    std::vector<std::string> themes;
    Sentiment sentiment = Sentiment::Neutral;
};
ReplyLabels extract_labels(std::string_view reply);

} // namespace arena::briefing

#pragma once

#include <optional>
#include <span>
#include <string>

#include "arena/briefing/brief.hpp"
#include "arena/llm/provider.hpp"
#include "arena/marketdata/news.hpp"

namespace arena::briefing {

/// Provider key used for summarizer requests in the reply store.
inline constexpr std::string_view kSummarizerAgent = "summarizer";

struct SummarizerOptions {
    double temperature = 0.5;
    int retry_limit = 3;
};

struct SummaryOutcome {
    DailyBrief brief;
    bool available = true;       // false when the provider failed every attempt
    std::optional<std::string> reply;  // verbatim provider reply, if any
    int attempts = 0;            // provider calls made
    std::string failure;         // last provider error when unavailable
};

/// Summarizes the articles for one asset and day.
///
/// Only articles for `asset` published no later than the end of `date` are
/// used, deduplicated. With no usable article the provider is not called and
/// the brief is empty and Neutral. The reply becomes the summary verbatim;
/// themes and sentiment come from its label lines.
SummaryOutcome summarize_day(const marketdata::AssetId& asset, Date date, std::span<const marketdata::NewsItem> articles,
                             llm::TextProvider& provider, const SummarizerOptions& options = {});

} // namespace arena::briefing

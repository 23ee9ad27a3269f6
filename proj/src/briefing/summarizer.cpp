#include "arena/briefing/summarizer.hpp"

#include <algorithm>

#include "arena/briefing/prompt.hpp"
#include "arena/core/errors.hpp"

namespace arena::briefing {

SummaryOutcome summarize_day(const marketdata::AssetId& asset, Date date, std::span<const marketdata::NewsItem> articles,
                             llm::TextProvider& provider, const SummarizerOptions& options) {
    std::vector<marketdata::NewsItem> usable;
    const Timestamp cutoff = end_of_day(date);
    std::copy_if(articles.begin(), articles.end(), std::back_inserter(usable), [&](const marketdata::NewsItem& n) {
        return n.asset.symbol == asset.symbol && n.published <= cutoff;
    });
    usable = marketdata::dedupe_news(usable);

    SummaryOutcome out;
    out.brief.asset = asset;
    out.brief.date = date;
    if (usable.empty()) return out;

    llm::CompletionRequest request;
    request.user = build_summary_prompt(asset.symbol, date, usable);
    request.temperature = options.temperature;
    request.key = llm::RequestKey{std::string(kSummarizerAgent), asset.symbol, date, 1};

    const int max_calls = 1 + std::max(0, options.retry_limit);
    for (int attempt = 1; attempt <= max_calls; ++attempt) {
        request.key.attempt = attempt;
        out.attempts = attempt;
        try {
            std::string reply = provider.complete(request);
            if (reply.empty()) throw ProviderError("empty summary reply");
            const auto labels = extract_labels(reply);
            out.brief.summary = reply;
            out.brief.themes = labels.themes;
            out.brief.sentiment = labels.sentiment;
            for (const auto& n : usable) out.brief.source_item_ids.push_back(n.id);
            out.reply = std::move(reply);
            return out;
        } catch (const std::exception& e) {
            out.failure = e.what();
        }
    }
    out.available = false;
    return out;
}

} // namespace arena::briefing

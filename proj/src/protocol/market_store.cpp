#include "arena/protocol/market_store.hpp"

#include <algorithm>

namespace arena::protocol {

void MarketStore::add(std::span<const marketdata::PriceBar> bars) {
    for (const auto& b : bars) bars_[b.asset.symbol].insert_or_assign(b.date, b);
}

std::optional<marketdata::PriceBar> MarketStore::bar(const std::string& symbol, Date d) const {
    const auto s = bars_.find(symbol);
    if (s == bars_.end()) return std::nullopt;
    const auto it = s->second.find(d);
    if (it == s->second.end()) return std::nullopt;
    return it->second;
}

std::vector<marketdata::PriceBar> MarketStore::history(const std::string& symbol, Date up_to, std::size_t k) const {
    std::vector<marketdata::PriceBar> out;
    const auto s = bars_.find(symbol);
    if (s == bars_.end() || k == 0) return out;
    auto it = s->second.upper_bound(up_to);
    while (it != s->second.begin() && out.size() < k) {
        --it;
        out.push_back(it->second);
    }
    std::reverse(out.begin(), out.end());
    return out;
}

MarketStore MarketStore::withheld_after(Date cutoff) const {
    MarketStore out;
    for (const auto& [symbol, series] : bars_)
        for (const auto& [d, bar] : series)
            if (d <= cutoff) out.bars_[symbol].emplace(d, bar);
    return out;
}

std::size_t MarketStore::size() const {
    std::size_t n = 0;
    for (const auto& [symbol, series] : bars_) n += series.size();
    return n;
}

void MemoryBriefSource::put(briefing::DailyBrief brief) {
    auto key = std::make_pair(brief.asset.symbol, brief.date);
    briefs_.insert_or_assign(std::move(key), std::move(brief));
}

std::optional<BriefOutcome> MemoryBriefSource::brief_for(const marketdata::AssetId& asset, Date d) {
    const auto it = briefs_.find({asset.symbol, d});
    if (it == briefs_.end()) return std::nullopt;
    BriefOutcome o;
    o.brief = it->second;
    return o;
}

std::optional<BriefOutcome> StoredBriefSource::brief_for(const marketdata::AssetId& asset, Date d) {
    auto b = store_.get(asset, d);
    if (!b) return std::nullopt;
    BriefOutcome o;
    o.brief = std::move(b);
    return o;
}

SummarizingBriefSource::SummarizingBriefSource(llm::TextProvider& provider, briefing::SummarizerOptions options,
                                               std::optional<briefing::BriefStore> out)
    : provider_(provider), options_(options), out_(std::move(out)) {}

void SummarizingBriefSource::add_news(std::span<const marketdata::NewsItem> items) {
    news_.insert(news_.end(), items.begin(), items.end());
}

std::optional<BriefOutcome> SummarizingBriefSource::brief_for(const marketdata::AssetId& asset, Date d) {
    std::vector<marketdata::NewsItem> day;
    std::copy_if(news_.begin(), news_.end(), std::back_inserter(day), [&](const marketdata::NewsItem& n) {
        return n.asset.symbol == asset.symbol && date_of(n.published) == d;
    });
    auto result = briefing::summarize_day(asset, d, day, provider_, options_);
    BriefOutcome o;
    o.available = result.available;
    o.reply = std::move(result.reply);
    o.attempts = result.attempts;
    o.failure = std::move(result.failure);
    if (result.available) {
        if (out_) out_->put(result.brief);
        o.brief = std::move(result.brief);
    }
    return o;
}

} // namespace arena::protocol

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "arena/briefing/brief_store.hpp"
#include "arena/briefing/summarizer.hpp"
#include "arena/marketdata/price.hpp"

namespace arena::protocol {

/// Normalized daily closes keyed by (symbol, date).
class MarketStore {
public:
    /// Inserts bars; a bar for an existing (symbol, date) replaces it.
    void add(std::span<const marketdata::PriceBar> bars);

    std::optional<marketdata::PriceBar> bar(const std::string& symbol, Date d) const;
    /// Up to `k` most recent bars dated <= `up_to`, oldest first.
    std::vector<marketdata::PriceBar> history(const std::string& symbol, Date up_to, std::size_t k) const;
    /// Copy without any bar dated after `cutoff`.
    MarketStore withheld_after(Date cutoff) const;
    std::size_t size() const;

private:
    std::map<std::string, std::map<Date, marketdata::PriceBar>> bars_;
};

struct BriefOutcome {
    std::optional<briefing::DailyBrief> brief;
    bool available = true;
    std::optional<std::string> reply;
    int attempts = 0;
    std::string failure;
};

/// Where a session gets the daily brief for an asset. nullopt means there is
/// nothing to publish for that day.
class BriefSource {
public:
    virtual ~BriefSource() = default;
    virtual std::optional<BriefOutcome> brief_for(const marketdata::AssetId& asset, Date d) = 0;
};

class NoBriefs final : public BriefSource {
public:
    std::optional<BriefOutcome> brief_for(const marketdata::AssetId&, Date) override { return std::nullopt; }
};

class MemoryBriefSource final : public BriefSource {
public:
    void put(briefing::DailyBrief brief);
    std::optional<BriefOutcome> brief_for(const marketdata::AssetId& asset, Date d) override;

private:
    std::map<std::pair<std::string, Date>, briefing::DailyBrief> briefs_;
};

/// Reads a brief store directory.
class StoredBriefSource final : public BriefSource {
public:
    explicit StoredBriefSource(briefing::BriefStore store) : store_(std::move(store)) {}
    std::optional<BriefOutcome> brief_for(const marketdata::AssetId& asset, Date d) override;

private:
    briefing::BriefStore store_;
};

/// Summarizes the day's news on demand. Articles are matched to the UTC day
/// they were published on. Published briefs are written to `out` when set.
class SummarizingBriefSource final : public BriefSource {
public:
    SummarizingBriefSource(llm::TextProvider& provider, briefing::SummarizerOptions options,
                           std::optional<briefing::BriefStore> out = std::nullopt);

    void add_news(std::span<const marketdata::NewsItem> items);
    std::optional<BriefOutcome> brief_for(const marketdata::AssetId& asset, Date d) override;

private:
    llm::TextProvider& provider_;
    briefing::SummarizerOptions options_;
    std::optional<briefing::BriefStore> out_;
    std::vector<marketdata::NewsItem> news_;
};

} // namespace arena::protocol

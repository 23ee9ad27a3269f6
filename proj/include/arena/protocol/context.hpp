#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "arena/briefing/brief.hpp"
#include "arena/core/phase.hpp"
#include "arena/marketdata/price.hpp"
#include "arena/protocol/action.hpp"

namespace arena::protocol {

/// Market-side inputs for one (asset, date). Identical for every agent.
struct MarketView {
    marketdata::AssetId asset;
    Date date;
    std::vector<marketdata::PriceBar> price_history;  // oldest first, ends at `date`
    std::optional<briefing::DailyBrief> brief;
    std::string run_id;
    Phase phase = Phase::Live;

    friend bool operator==(const MarketView&, const MarketView&) = default;
};

struct DecisionRecord {
    std::string agent;
    marketdata::AssetId asset;
    Date date;
    Phase phase = Phase::Live;
    TradeAction action;
    int attempts = 1;
    std::optional<std::string> raw_reply;
    std::chrono::milliseconds latency{0};
    bool failed = false;   // no parseable reply; accounted as HOLD
    std::string failure;   // reason when failed

    friend bool operator==(const DecisionRecord&, const DecisionRecord&) = default;
};

struct DailyContext {
    std::string agent;
    MarketView market;
    std::vector<DecisionRecord> recent_actions;  // oldest first, at most memory_size
};

nlohmann::json market_view_to_json(const MarketView& m);
nlohmann::json decision_to_json(const DecisionRecord& d);

/// Marker used in place of the news block when no brief is available.
inline constexpr std::string_view kNoBriefMarker = "No verified news available";

struct DecisionPrompt {
    std::string system;  // role, asset, price history, action definitions, output format
    std::string user;    // news brief, recent actions, run metadata

    std::string text() const { return system + "\n\n" + user; }
};

DecisionPrompt build_decision_prompt(const DailyContext& ctx);

} // namespace arena::protocol

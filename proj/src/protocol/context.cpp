#include "arena/protocol/context.hpp"

#include "arena/briefing/brief_store.hpp"
#include "arena/core/text.hpp"

namespace arena::protocol {

using nlohmann::json;

json market_view_to_json(const MarketView& m) {
    json prices = json::array();
    for (const auto& b : m.price_history)
        prices.push_back(json{{"date", b.date.to_string()}, {"close", b.close}, {"source", b.source}});
    return json{{"symbol", m.asset.symbol},
                {"asset_class", std::string(marketdata::to_string(m.asset.asset_class))},
                {"date", m.date.to_string()},
                {"prices", prices},
                {"brief", m.brief ? briefing::brief_to_json(*m.brief) : json(nullptr)},
                {"run_id", m.run_id},
                {"phase", std::string(to_string(m.phase))}};
}

json decision_to_json(const DecisionRecord& d) {
    return json{{"agent", d.agent},
                {"symbol", d.asset.symbol},
                {"date", d.date.to_string()},
                {"phase", std::string(to_string(d.phase))},
                {"action", std::string(to_string(d.action))},
                {"attempts", d.attempts},
                {"raw_reply", d.raw_reply ? json(*d.raw_reply) : json(nullptr)},
                {"latency_ms", d.latency.count()},
                {"failed", d.failed},
                {"failure", d.failure}};
}

namespace {

constexpr std::string_view kRole =
    "You are a professional financial decision-making agent specialized in quantitative and fundamental "
    "reasoning with a daily trading frequency.\n"
    "Your primary task is to analyze the reasoning outputs of other agent roles and integrate their insights "
    "into a unified, evidence-based conclusion.\n\n";

constexpr std::string_view kActions =
    "Your possible actions are defined as follows:\n\n"
    "- Buy: Indicates a bullish outlook or perceived undervaluation, suggesting the asset price is likely to "
    "rise. And you choose to be in long position.\n\n"
    "- Sell: Indicates a bearish outlook or perceived overvaluation, suggesting the asset price is likely to "
    "fall. And you choose to be in short position.\n\n"
    "- Hold: Indicates market uncertainty or equilibrium, suggesting no immediate trading action. And you "
    "choose to go flat position.\n\n"
    "Return your final output strictly in the following format:\n\n"
    "[Decision]: Buy / Sell / Hold\n";

} // namespace

DecisionPrompt build_decision_prompt(const DailyContext& ctx) {
    const auto& m = ctx.market;
    DecisionPrompt p;

    std::string prices;
    for (const auto& b : m.price_history)
        prices += "- " + b.date.to_string() + ": " + text::format_double(b.close) + "\n";
    if (prices.empty()) prices = "- (no price history)\n";

    p.system = std::string(kRole);
    p.system += "Based on your analysis and the provided definitions, determine the most appropriate trading "
                "decision for the target asset " +
                m.asset.symbol + " given its current market price history (oldest first):\n" + prices +
                "and contextual signals.\n\n";
    p.system += kActions;

    p.user = "Asset: " + m.asset.symbol + " (" + std::string(marketdata::to_string(m.asset.asset_class)) + ")\n";
    p.user += "Trading date: " + m.date.to_string() + "\n";
    p.user += "Run: " + m.run_id + " (" + std::string(to_string(m.phase)) + ")\n\n";
    if (m.brief && !m.brief->summary.empty()) {
        p.user += "Verified news summary:\n" + m.brief->summary + "\n";
        if (!m.brief->themes.empty()) {
            p.user += "Themes:";
            for (std::size_t i = 0; i < m.brief->themes.size(); ++i)
                p.user += (i ? ", " : " ") + m.brief->themes[i];
            p.user += "\n";
        }
        p.user += "News sentiment: " + std::string(briefing::to_string(m.brief->sentiment)) + "\n\n";
    } else {
        p.user += std::string(kNoBriefMarker) + " for " + m.asset.symbol + " on " + m.date.to_string() + ".\n\n";
    }
    p.user += "Your recent actions (oldest first):\n";
    if (ctx.recent_actions.empty()) p.user += "- (none)\n";
    for (const auto& d : ctx.recent_actions)
        p.user += "- " + d.date.to_string() + ": " + std::string(to_string(d.action)) + (d.failed ? " (fallback)" : "") +
                  "\n";
    return p;
}

} // namespace arena::protocol

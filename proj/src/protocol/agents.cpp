#include "arena/protocol/agents.hpp"

#include "arena/core/errors.hpp"
#include "arena/core/text.hpp"
#include "arena/protocol/decision.hpp"

namespace arena::protocol {

DecisionRecord Agent::record(const DailyContext& ctx, TradeAction action) const {
    DecisionRecord r;
    r.agent = spec_.name;
    r.asset = ctx.market.asset;
    r.date = ctx.market.date;
    r.phase = ctx.market.phase;
    r.action = action;
    return r;
}

ScriptedAgent::ScriptedAgent(AgentSpec spec, std::map<Date, TradeAction> script)
    : Agent(std::move(spec)), script_(std::move(script)) {}

DecisionRecord ScriptedAgent::decide(const DailyContext& ctx) {
    const auto it = script_.find(ctx.market.date);
    if (it != script_.end()) return record(ctx, it->second);
    auto r = record(ctx, kHold);
    r.failed = true;
    r.failure = "no scripted action for " + ctx.market.date.to_string();
    return r;
}

LlmAgent::LlmAgent(AgentSpec spec, llm::TextProvider& provider, ProtocolConfig cfg, const Clock& clock)
    : Agent(std::move(spec)), provider_(provider), cfg_(cfg), clock_(clock) {}

DecisionRecord LlmAgent::decide(const DailyContext& ctx) {
    return decide_with_retry(spec(), ctx, provider_, cfg_, clock_);
}

std::map<Date, TradeAction> parse_script_csv(std::string_view csv) {
    const auto lines = text::split_lines(csv);
    if (lines.empty() || text::trim(lines.front()) != "date,action")
        throw ParseError("script CSV must start with header 'date,action'");
    std::map<Date, TradeAction> out;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (text::trim(lines[i]).empty()) continue;
        const auto f = text::parse_csv_row(lines[i]);
        if (f.size() != 2) throw ParseError("script CSV line " + std::to_string(i + 1) + ": expected 2 fields");
        const auto action = text::to_upper(text::trim(f[1]));
        if (action != "BUY" && action != "SELL" && action != "HOLD")
            throw ParseError("script CSV line " + std::to_string(i + 1) + ": action must be BUY, SELL or HOLD");
        if (!out.emplace(Date::parse(text::trim(f[0])), action_from_string(action)).second)
            throw ParseError("script CSV line " + std::to_string(i + 1) + ": duplicate date");
    }
    return out;
}

DecisionRecord vote_decision(const AgentSpec& ensemble, const DailyContext& ctx,
                             std::span<const DecisionRecord> members) {
    std::vector<TradeAction> actions;
    actions.reserve(members.size());
    for (const auto& m : members) actions.push_back(m.action);
    DecisionRecord r;
    r.agent = ensemble.name;
    r.asset = ctx.market.asset;
    r.date = ctx.market.date;
    r.phase = ctx.market.phase;
    r.action = majority_vote(actions);
    return r;
}

std::unique_ptr<Agent> make_agent(const AgentSpec& spec, const RunConfig& cfg, const ProviderFor& provider_for,
                                  const Clock& clock) {
    switch (spec.framework) {
    case Framework::BuyAndHold: return std::make_unique<BuyAndHoldAgent>(spec);
    case Framework::AlwaysHold: return std::make_unique<AlwaysHoldAgent>(spec);
    case Framework::Scripted:
        return std::make_unique<ScriptedAgent>(spec,
                                               parse_script_csv(text::read_file(cfg.resolve(spec.params.at("script")))));
    case Framework::GenericLLM: return std::make_unique<LlmAgent>(spec, provider_for(spec), cfg.protocol, clock);
    case Framework::VoteEnsemble: break;
    }
    throw ConfigError("agent '" + spec.name + "' is an ensemble and has no standalone implementation");
}

} // namespace arena::protocol

#pragma once

#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string_view>

#include "arena/core/clock.hpp"
#include "arena/llm/provider.hpp"
#include "arena/protocol/agent_spec.hpp"
#include "arena/protocol/config.hpp"
#include "arena/protocol/context.hpp"

namespace arena::protocol {

class Agent {
public:
    explicit Agent(AgentSpec spec) : spec_(std::move(spec)) {}
    virtual ~Agent() = default;

    const AgentSpec& spec() const { return spec_; }
    virtual DecisionRecord decide(const DailyContext& ctx) = 0;

protected:
    DecisionRecord record(const DailyContext& ctx, TradeAction action) const;

private:
    AgentSpec spec_;
};

/// Long every period.
class BuyAndHoldAgent final : public Agent {
public:
    using Agent::Agent;
    DecisionRecord decide(const DailyContext& ctx) override { return record(ctx, kBuy); }
};

/// Flat every period.
class AlwaysHoldAgent final : public Agent {
public:
    using Agent::Agent;
    DecisionRecord decide(const DailyContext& ctx) override { return record(ctx, kHold); }
};

/// Replays a fixed date -> action table. A date missing from the table is
/// flagged and accounted as HOLD.
class ScriptedAgent final : public Agent {
public:
    ScriptedAgent(AgentSpec spec, std::map<Date, TradeAction> script);
    DecisionRecord decide(const DailyContext& ctx) override;

private:
    std::map<Date, TradeAction> script_;
};

/// Single-prompt LLM agent over any text-completion backbone.
class LlmAgent final : public Agent {
public:
    LlmAgent(AgentSpec spec, llm::TextProvider& provider, ProtocolConfig cfg, const Clock& clock);
    DecisionRecord decide(const DailyContext& ctx) override;

private:
    llm::TextProvider& provider_;
    ProtocolConfig cfg_;
    const Clock& clock_;
};

/// Scripted-agent file: CSV `date,action` with action in {BUY,SELL,HOLD}.
std::map<Date, TradeAction> parse_script_csv(std::string_view csv);

/// Decision of a majority-vote ensemble from its members' records for the
/// same context. Failed members count as the HOLD they were accounted as.
DecisionRecord vote_decision(const AgentSpec& ensemble, const DailyContext& ctx,
                             std::span<const DecisionRecord> members);

using ProviderFor = std::function<llm::TextProvider&(const AgentSpec&)>;

/// Builds a non-ensemble agent. Script paths resolve against cfg.base_dir.
std::unique_ptr<Agent> make_agent(const AgentSpec& spec, const RunConfig& cfg, const ProviderFor& provider_for,
                                  const Clock& clock);

} // namespace arena::protocol

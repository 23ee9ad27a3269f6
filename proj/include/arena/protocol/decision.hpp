#pragma once

#include "arena/core/clock.hpp"
#include "arena/llm/provider.hpp"
#include "arena/protocol/agent_spec.hpp"
#include "arena/protocol/config.hpp"
#include "arena/protocol/context.hpp"

namespace arena::protocol {

/// Asks `provider` for a decision up to 1 + retry_limit times with identical
/// requests. The first reply that parses wins. If none does (or the provider
/// keeps failing) the record is HOLD with `failed` set. Latency is measured on
/// `clock`.
DecisionRecord decide_with_retry(const AgentSpec& agent, const DailyContext& ctx, llm::TextProvider& provider,
                                 const ProtocolConfig& cfg, const Clock& clock);

} // namespace arena::protocol

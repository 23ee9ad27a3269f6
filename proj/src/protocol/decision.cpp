#include "arena/protocol/decision.hpp"

#include "arena/core/errors.hpp"

namespace arena::protocol {

DecisionRecord decide_with_retry(const AgentSpec& agent, const DailyContext& ctx, llm::TextProvider& provider,
                                 const ProtocolConfig& cfg, const Clock& clock) {
    const auto prompt = build_decision_prompt(ctx);
    llm::CompletionRequest request{prompt.system, prompt.user, cfg.temperature,
                                   llm::RequestKey{agent.name, ctx.market.asset.symbol, ctx.market.date, 1}};

    DecisionRecord rec;
    rec.agent = agent.name;
    rec.asset = ctx.market.asset;
    rec.date = ctx.market.date;
    rec.phase = ctx.market.phase;

    const auto started = clock.now();
    const int max_calls = 1 + cfg.retry_limit;
    for (int attempt = 1; attempt <= max_calls; ++attempt) {
        request.key.attempt = attempt;
        rec.attempts = attempt;
        try {
            std::string reply = provider.complete(request);
            rec.raw_reply = reply;
            rec.action = parse_decision(reply);
            rec.failed = false;
            rec.failure.clear();
            rec.latency = clock.now() - started;
            return rec;
        } catch (const ParseError& e) {
            rec.failure = e.what();
        } catch (const std::exception& e) {
            rec.failure = std::string("provider: ") + e.what();
        }
    }
    rec.action = kHold;
    rec.failed = true;
    rec.latency = clock.now() - started;
    return rec;
}

} // namespace arena::protocol

#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "arena/core/clock.hpp"
#include "arena/persistence/arena_state.hpp"
#include "arena/persistence/event_log.hpp"
#include "arena/protocol/agents.hpp"
#include "arena/protocol/config.hpp"
#include "arena/protocol/market_store.hpp"

namespace arena::protocol {

struct SessionOptions {
    bool parallel_decisions = false;  // query independent agents concurrently
};

/// Drives one run day by day. Every outcome is appended to the event log
/// and folded into the session's ArenaState, so the state a session holds
/// is exactly what a replay of its log produces.
///
/// A decision made on date d holds the position from d's close to the next
/// available close of that asset. Fills carry the phase of the decision that
/// opened them; only live fills reach the live series.
class Session {
public:
    Session(RunConfig cfg, MarketStore& market, BriefSource& briefs, ProviderFor provider_for, const Clock& clock,
            persistence::EventLog& log, SessionOptions options = {});
    ~Session();

    /// Dates from warmup_start to end on which at least one asset trades.
    const std::vector<Date>& schedule() const { return schedule_; }
    Phase phase_of(Date d) const { return d < cfg_.live_start ? Phase::WarmUp : Phase::Live; }

    /// Processes one date. Dates must be increasing.
    void step(Date d);
    /// Processes every remaining scheduled date up to and including `last`.
    void run_until(Date last);
    void run() { run_until(cfg_.end); }

    /// Records an outage for `d` without trading: one gap note per asset.
    void note_outage(Date d, const std::string& reason);

    const RunConfig& config() const { return cfg_; }
    const persistence::ArenaState& state() const { return state_; }
    const std::vector<DecisionRecord>& decisions() const { return decisions_; }
    std::optional<Date> last_step() const { return last_step_; }

    /// Called with every context handed to a non-ensemble agent.
    void on_context(std::function<void(const DailyContext&)> observer) { observer_ = std::move(observer); }

private:
    struct Pending {
        Signal signal = Signal::Flat;
        double close = 0.0;
        Phase phase = Phase::Live;
        Date decided_on;
    };

    void emit(Date d, persistence::EventKind kind, nlohmann::json payload);
    std::vector<DecisionRecord> decide_all(const std::vector<DailyContext>& contexts);

    RunConfig cfg_;
    MarketStore& market_;
    BriefSource& briefs_;
    const Clock& clock_;
    persistence::EventLog& log_;
    SessionOptions options_;

    std::vector<Date> schedule_;
    std::map<std::string, std::vector<Date>> calendars_;  // by symbol
    std::map<std::string, std::unique_ptr<Agent>> agents_;
    std::map<std::pair<std::string, std::string>, Pending> pending_;
    std::map<std::pair<std::string, std::string>, std::vector<DecisionRecord>> memory_;
    std::map<persistence::SeriesId, ledger::PositionLedger> ledgers_;

    persistence::ArenaState state_;
    std::vector<DecisionRecord> decisions_;
    std::optional<Date> last_step_;
    std::function<void(const DailyContext&)> observer_;
};

/// Digest of the market view a decision was requested for.
std::string market_digest(const MarketView& view);

/// Loads and normalizes the configured price files.
MarketStore load_market(const RunConfig& cfg);
/// Loads the configured news files.
std::vector<marketdata::NewsItem> load_news(const RunConfig& cfg);

} // namespace arena::protocol

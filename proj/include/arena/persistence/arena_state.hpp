#pragma once

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "arena/analytics/leaderboard.hpp"
#include "arena/analytics/metrics.hpp"
#include "arena/core/phase.hpp"
#include "arena/ledger/ledger.hpp"
#include "arena/persistence/event.hpp"

namespace arena::persistence {

/// Agent identity carried in event payloads.
struct AgentRef {
    std::string name;
    std::string label;
    std::string framework;
    std::string backbone;  // empty for non-LLM agents
    std::string strategy;

    friend bool operator==(const AgentRef&, const AgentRef&) = default;
};

nlohmann::json agent_ref_to_json(const AgentRef& a);
AgentRef agent_ref_from_json(const nlohmann::json& j);

nlohmann::json snapshot_to_json(const analytics::MetricsSnapshot& s);

struct SeriesId {
    std::string agent;
    std::string symbol;
    Phase phase = Phase::Live;

    friend auto operator<=>(const SeriesId&, const SeriesId&) = default;
};

struct Series {
    AgentRef agent;
    marketdata::AssetId asset;
    Phase phase = Phase::Live;
    double periods_per_year = analytics::kEquityPeriodsPerYear;
    double risk_free = 0.0;
    ledger::PositionLedger ledger;

    analytics::MetricsSnapshot snapshot() const;
};

struct DecisionEntry {
    Date date;
    std::string agent;
    std::string symbol;
    Phase phase = Phase::Live;
    std::string action;
    int attempts = 1;
    bool failed = false;

    friend bool operator==(const DecisionEntry&, const DecisionEntry&) = default;
};

/// Everything derivable from a run's event log: per-series ledgers, metrics
/// and leaderboard rows. Built only by folding events, so a replay of the
/// log reproduces the live run's state exactly.
class ArenaState {
public:
    /// Folds one event. Fill payloads are recomputed from signal and prices
    /// and snapshot payloads are recomputed from the ledger; a disagreement
    /// throws IntegrityError.
    void apply(const ArenaEvent& e);

    static ArenaState replay(std::span<const ArenaEvent> events);

    const std::string& run_id() const { return run_id_; }
    std::uint64_t last_seq() const { return last_seq_; }
    std::optional<Date> last_date() const { return last_date_; }
    const std::map<SeriesId, Series>& series() const { return series_; }
    const std::vector<DecisionEntry>& decisions() const { return decisions_; }
    std::size_t gap_count() const { return gaps_; }
    std::size_t failure_count() const { return failures_; }

    /// One unranked row per live series with at least one fill.
    std::vector<analytics::LeaderboardRow> live_rows() const;
    /// Live return records ordered by (agent, asset, date).
    std::vector<ledger::ReturnRecord> live_returns() const;

private:
    std::string run_id_;
    std::uint64_t last_seq_ = 0;
    std::optional<Date> last_date_;
    std::map<SeriesId, Series> series_;
    std::vector<DecisionEntry> decisions_;
    std::size_t gaps_ = 0;
    std::size_t failures_ = 0;
};

} // namespace arena::persistence

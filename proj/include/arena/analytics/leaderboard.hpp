#pragma once

#include <set>
#include <span>
#include <string>
#include <vector>

#include "arena/analytics/metrics.hpp"

namespace arena::analytics {

struct LeaderboardRow {
    std::string run_id;
    std::string agent;     // unique agent name within a run
    std::string label;     // agent family shown in the Agents filter
    std::string backbone;  // empty for non-LLM agents
    std::string asset;
    std::string strategy;
    MetricsSnapshot metrics;
    double cr_without_fees = 0.0;
    double balance = 1.0;  // normalized equity
    int rank = 0;
};

/// Four filter axes. An empty set leaves its axis unconstrained. `agents`
/// matches either the agent name or its label, `models` the backbone.
struct LeaderboardFilter {
    std::set<std::string> agents;
    std::set<std::string> assets;
    std::set<std::string> models;
    std::set<std::string> strategies;

    bool matches(const LeaderboardRow& row) const;
};

/// Ranking order: CR descending, then SR descending (missing SR last), then
/// agent name, asset and run id ascending.
bool ranks_before(const LeaderboardRow& a, const LeaderboardRow& b);

/// Rows passing the filter, ordered by rank and numbered 1..k.
std::vector<LeaderboardRow> leaderboard(std::span<const LeaderboardRow> rows, const LeaderboardFilter& filter = {});

/// CSV `agent,backbone,asset,strategy,as_of,CR,AR,AV,SR,MDD`. CR, AR, AV and
/// MDD are percentages and SR a plain ratio, all with two decimals; a missing
/// value and a missing backbone are written as "-".
std::string write_metrics_csv(std::span<const LeaderboardRow> rows);

} // namespace arena::analytics

#pragma once

#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "arena/analytics/leaderboard.hpp"
#include "arena/persistence/arena_state.hpp"

namespace arena::persistence {

/// Rows of several runs, filtered and ranked.
std::vector<analytics::LeaderboardRow> ranked_rows(std::span<const ArenaState* const> states,
                                                   const analytics::LeaderboardFilter& filter = {});

nlohmann::json leaderboard_to_json(std::span<const analytics::LeaderboardRow> ranked);

/// One series per live (agent, asset) passing the filter, labelled
/// `agent-asset-model`, with one (date, equity) point per fill.
nlohmann::json equity_to_json(std::span<const ArenaState* const> states, const analytics::LeaderboardFilter& filter = {});

/// Files written by `arena replay`: metrics.csv, leaderboard.json and
/// returns.csv inside `dir`.
struct ExportBundle {
    std::string metrics_csv;
    std::string leaderboard_json;
    std::string returns_csv;
};

ExportBundle make_exports(const ArenaState& state);
void write_exports(const ExportBundle& bundle, const std::string& dir);

} // namespace arena::persistence

#include "arena/persistence/exports.hpp"

#include <filesystem>

#include "arena/core/text.hpp"

namespace arena::persistence {

using nlohmann::json;

std::vector<analytics::LeaderboardRow> ranked_rows(std::span<const ArenaState* const> states,
                                                   const analytics::LeaderboardFilter& filter) {
    std::vector<analytics::LeaderboardRow> all;
    for (const ArenaState* s : states) {
        auto rows = s->live_rows();
        all.insert(all.end(), rows.begin(), rows.end());
    }
    return analytics::leaderboard(all, filter);
}

json leaderboard_to_json(std::span<const analytics::LeaderboardRow> ranked) {
    json rows = json::array();
    for (const auto& r : ranked) {
        json row = snapshot_to_json(r.metrics);
        row["rank"] = r.rank;
        row["run_id"] = r.run_id;
        row["agent"] = r.agent;
        row["label"] = r.label;
        row["backbone"] = r.backbone;
        row["asset"] = r.asset;
        row["strategy"] = r.strategy;
        row["cr_without_fees"] = r.cr_without_fees;
        row["balance"] = r.balance;
        rows.push_back(std::move(row));
    }
    return rows;
}

json equity_to_json(std::span<const ArenaState* const> states, const analytics::LeaderboardFilter& filter) {
    json out = json::array();
    for (const ArenaState* state : states) {
        for (const auto& [id, s] : state->series()) {
            if (id.phase != Phase::Live || s.ledger.records().empty()) continue;
            analytics::LeaderboardRow probe;
            probe.agent = s.agent.name;
            probe.label = s.agent.label;
            probe.backbone = s.agent.backbone;
            probe.asset = s.asset.symbol;
            probe.strategy = s.agent.strategy;
            if (!filter.matches(probe)) continue;

            json points = json::array();
            for (const auto& r : s.ledger.records())
                points.push_back(json{{"date", r.date.to_string()}, {"equity", r.equity}});
            const std::string model = s.agent.backbone.empty() ? "-" : s.agent.backbone;
            out.push_back(json{{"label", s.agent.name + "-" + s.asset.symbol + "-" + model},
                               {"run_id", state->run_id()},
                               {"agent", s.agent.name},
                               {"asset", s.asset.symbol},
                               {"model", model},
                               {"strategy", s.agent.strategy},
                               {"points", std::move(points)}});
        }
    }
    return out;
}

ExportBundle make_exports(const ArenaState& state) {
    const ArenaState* one[] = {&state};
    const auto ranked = ranked_rows(one);
    ExportBundle b;
    b.metrics_csv = analytics::write_metrics_csv(ranked);
    b.leaderboard_json = leaderboard_to_json(ranked).dump(2) + "\n";
    b.returns_csv = ledger::write_returns_csv(state.live_returns());
    return b;
}

void write_exports(const ExportBundle& bundle, const std::string& dir) {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    text::write_file((fs::path(dir) / "metrics.csv").string(), bundle.metrics_csv);
    text::write_file((fs::path(dir) / "leaderboard.json").string(), bundle.leaderboard_json);
    text::write_file((fs::path(dir) / "returns.csv").string(), bundle.returns_csv);
}

} // namespace arena::persistence

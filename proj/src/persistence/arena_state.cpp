#include "arena/persistence/arena_state.hpp"

#include "arena/core/errors.hpp"
#include "arena/core/signal.hpp"

namespace arena::persistence {

using nlohmann::json;

json agent_ref_to_json(const AgentRef& a) {
    return json{{"name", a.name},
                {"label", a.label},
                {"framework", a.framework},
                {"backbone", a.backbone},
                {"strategy", a.strategy}};
}

AgentRef agent_ref_from_json(const json& j) {
    return AgentRef{j.at("name").get<std::string>(), j.at("label").get<std::string>(),
                    j.at("framework").get<std::string>(), j.at("backbone").get<std::string>(),
                    j.at("strategy").get<std::string>()};
}

namespace {

json optional_number(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

} // namespace

json snapshot_to_json(const analytics::MetricsSnapshot& s) {
    return json{{"cr", s.cr},
                {"ar", s.ar},
                {"av", optional_number(s.av)},
                {"sr", optional_number(s.sr)},
                {"mdd", s.mdd},
                {"as_of", s.as_of.to_string()}};
}

analytics::MetricsSnapshot Series::snapshot() const {
    const auto returns = ledger.net_returns();
    const analytics::MetricsWindow w{returns, periods_per_year, risk_free};
    return analytics::compute_snapshot(w, ledger.records().back().date);
}

void ArenaState::apply(const ArenaEvent& e) {
    if (e.seq != last_seq_ + 1)
        throw IntegrityError(e.seq, "state expected seq " + std::to_string(last_seq_ + 1));
    if (last_seq_ == 0) run_id_ = e.run_id;

    try {
        const json& p = e.payload;
        switch (e.kind) {
        case EventKind::DecisionMade:
            decisions_.push_back(DecisionEntry{e.date, p.at("agent").at("name").get<std::string>(),
                                               p.at("symbol").get<std::string>(),
                                               phase_from_string(p.at("phase").get<std::string>()),
                                               p.at("action").get<std::string>(), p.at("attempts").get<int>(),
                                               p.at("failed").get<bool>()});
            break;
        case EventKind::FillApplied: {
            const AgentRef agent = agent_ref_from_json(p.at("agent"));
            const auto asset = marketdata::AssetId::make(
                p.at("symbol").get<std::string>(),
                marketdata::asset_class_from_string(p.at("asset_class").get<std::string>()));
            const Phase phase = phase_from_string(p.at("phase").get<std::string>());
            const SeriesId id{agent.name, asset.symbol, phase};
            auto it = series_.find(id);
            if (it == series_.end()) {
                Series s{agent,
                         asset,
                         phase,
                         p.at("periods_per_year").get<double>(),
                         p.at("risk_free").get<double>(),
                         ledger::PositionLedger(agent.name, asset, ledger::FeeModel{p.at("fee_bps").get<double>()})};
                it = series_.emplace(id, std::move(s)).first;
            }
            const auto& rec = it->second.ledger.fill(e.date, signal_from_int(p.at("signal").get<int>()),
                                                     p.at("prev_close").get<double>(), p.at("close").get<double>());
            if (rec.gross_return != p.at("gross_return").get<double>() ||
                rec.net_return != p.at("net_return").get<double>() || rec.equity != p.at("equity").get<double>())
                throw IntegrityError(e.seq, "fill payload disagrees with recomputed ledger");
            break;
        }
        case EventKind::SnapshotEmitted: {
            const SeriesId id{p.at("agent").get<std::string>(), p.at("symbol").get<std::string>(),
                              phase_from_string(p.at("phase").get<std::string>())};
            const auto it = series_.find(id);
            if (it == series_.end()) throw IntegrityError(e.seq, "snapshot for a series with no fills");
            if (snapshot_to_json(it->second.snapshot()) != p.at("metrics"))
                throw IntegrityError(e.seq, "snapshot payload disagrees with recomputed metrics");
            break;
        }
        case EventKind::GapNoted: ++gaps_; break;
        case EventKind::FailureNoted: ++failures_; break;
        case EventKind::PriceObserved:
        case EventKind::BriefPublished:
        case EventKind::DecisionRequested: break;
        }
    } catch (const json::exception& ex) {
        throw IntegrityError(e.seq, std::string("malformed payload: ") + ex.what());
    } catch (const ValidationError& ex) {
        throw IntegrityError(e.seq, ex.what());
    }
    last_seq_ = e.seq;
    last_date_ = e.date;
}

ArenaState ArenaState::replay(std::span<const ArenaEvent> events) {
    ArenaState state;
    for (const auto& e : events) state.apply(e);
    return state;
}

std::vector<analytics::LeaderboardRow> ArenaState::live_rows() const {
    std::vector<analytics::LeaderboardRow> rows;
    for (const auto& [id, s] : series_) {
        if (id.phase != Phase::Live || s.ledger.records().empty()) continue;
        analytics::LeaderboardRow row;
        row.run_id = run_id_;
        row.agent = s.agent.name;
        row.label = s.agent.label;
        row.backbone = s.agent.backbone;
        row.asset = s.asset.symbol;
        row.strategy = s.agent.strategy;
        row.metrics = s.snapshot();
        row.cr_without_fees = s.ledger.gross_equity() - 1.0;
        row.balance = s.ledger.equity();
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<ledger::ReturnRecord> ArenaState::live_returns() const {
    std::vector<ledger::ReturnRecord> out;
    for (const auto& [id, s] : series_) {
        if (id.phase != Phase::Live) continue;
        out.insert(out.end(), s.ledger.records().begin(), s.ledger.records().end());
    }
    return out;
}

} // namespace arena::persistence

#include "arena/protocol/session.hpp"

#include <algorithm>
#include <future>
#include <set>

#include "arena/briefing/brief_store.hpp"
#include "arena/core/errors.hpp"
#include "arena/core/hash.hpp"
#include "arena/core/text.hpp"
#include "arena/marketdata/calendar.hpp"
#include "arena/marketdata/fixtures.hpp"

namespace arena::protocol {

using nlohmann::json;
using persistence::EventKind;

namespace {

std::string phase_name(Phase p) { return std::string(to_string(p)); }

} // namespace

std::string market_digest(const MarketView& view) {
    return sha256_hex(market_view_to_json(view).dump()).substr(0, 16);
}

Session::Session(RunConfig cfg, MarketStore& market, BriefSource& briefs, ProviderFor provider_for,
                 const Clock& clock, persistence::EventLog& log, SessionOptions options)
    : cfg_(std::move(cfg)), market_(market), briefs_(briefs), clock_(clock), log_(log), options_(options) {
    cfg_.validate();
    if (log_.size() != 0) throw ValidationError("session needs an empty event log");

    std::set<Date> all;
    for (const auto& a : cfg_.assets) {
        auto cal = marketdata::calendar(a.asset_class, cfg_.warmup_start, cfg_.end, cfg_.holidays);
        all.insert(cal.dates.begin(), cal.dates.end());
        calendars_[a.symbol] = std::move(cal.dates);
    }
    schedule_.assign(all.begin(), all.end());

    for (const auto& spec : cfg_.agents)
        if (spec.framework != Framework::VoteEnsemble)
            agents_.emplace(spec.name, make_agent(spec, cfg_, provider_for, clock_));
}

Session::~Session() = default;

void Session::emit(Date d, EventKind kind, json payload) {
    persistence::ArenaEvent e;
    e.seq = log_.last_seq() + 1;
    e.run_id = cfg_.run_id;
    e.date = d;
    e.kind = kind;
    e.payload = std::move(payload);
    log_.append(e);
    state_.apply(e);
}

std::vector<DecisionRecord> Session::decide_all(const std::vector<DailyContext>& contexts) {
    std::vector<std::optional<DecisionRecord>> out(contexts.size());
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < contexts.size(); ++i) index[contexts[i].agent] = i;

    std::vector<std::pair<std::size_t, std::future<DecisionRecord>>> running;
    for (std::size_t i = 0; i < contexts.size(); ++i) {
        const auto it = agents_.find(contexts[i].agent);
        if (it == agents_.end()) continue;
        if (observer_) observer_(contexts[i]);
        Agent* agent = it->second.get();
        if (options_.parallel_decisions && agent->spec().framework == Framework::GenericLLM)
            running.emplace_back(i, std::async(std::launch::async, [agent, &ctx = contexts[i]] {
                                     return agent->decide(ctx);
                                 }));
        else
            out[i] = agent->decide(contexts[i]);
    }
    for (auto& [i, f] : running) out[i] = f.get();

    for (std::size_t i = 0; i < contexts.size(); ++i) {
        if (out[i]) continue;
        const auto& spec = cfg_.agent(contexts[i].agent);
        std::vector<DecisionRecord> members;
        for (const auto& m : spec.members) members.push_back(*out.at(index.at(m)));
        out[i] = vote_decision(spec, contexts[i], members);
    }

    std::vector<DecisionRecord> records;
    for (auto& r : out) records.push_back(std::move(*r));
    return records;
}

void Session::note_outage(Date d, const std::string& reason) {
    if (last_step_ && d <= *last_step_) throw ValidationError("date " + d.to_string() + " already processed");
    for (const auto& a : cfg_.assets) emit(d, EventKind::GapNoted, json{{"symbol", a.symbol}, {"reason", reason}});
    last_step_ = d;
}

void Session::step(Date d) {
    if (last_step_ && d <= *last_step_) throw ValidationError("date " + d.to_string() + " already processed");
    const Phase phase = phase_of(d);

    std::vector<std::pair<marketdata::AssetId, marketdata::PriceBar>> active;
    for (const auto& a : cfg_.assets) {
        const auto& cal = calendars_.at(a.symbol);
        if (!std::binary_search(cal.begin(), cal.end(), d)) continue;
        if (auto bar = market_.bar(a.symbol, d)) {
            emit(d, EventKind::PriceObserved,
                 json{{"symbol", a.symbol},
                      {"asset_class", std::string(marketdata::to_string(a.asset_class))},
                      {"close", bar->close},
                      {"source", bar->source}});
            active.emplace_back(a, *bar);
        } else {
            emit(d, EventKind::GapNoted, json{{"symbol", a.symbol}, {"reason", "missing price"}});
        }
    }

    std::vector<MarketView> views;
    for (const auto& [asset, bar] : active) {
        MarketView v;
        v.asset = asset;
        v.date = d;
        v.price_history = market_.history(asset.symbol, d, static_cast<std::size_t>(cfg_.protocol.memory_size));
        v.run_id = cfg_.run_id;
        v.phase = phase;
        if (auto outcome = briefs_.brief_for(asset, d)) {
            emit(d, EventKind::BriefPublished,
                 json{{"symbol", asset.symbol},
                      {"available", outcome->available},
                      {"brief", outcome->brief ? briefing::brief_to_json(*outcome->brief) : json(nullptr)},
                      {"reply", outcome->reply ? json(*outcome->reply) : json(nullptr)},
                      {"attempts", outcome->attempts},
                      {"failure", outcome->failure}});
            if (outcome->available && outcome->brief && !outcome->brief->summary.empty())
                v.brief = std::move(outcome->brief);
        }
        views.push_back(std::move(v));
    }

    std::vector<std::vector<DailyContext>> contexts(views.size());
    for (std::size_t i = 0; i < views.size(); ++i) {
        const std::string digest = market_digest(views[i]);
        for (const auto& spec : cfg_.agents) {
            DailyContext ctx{spec.name, views[i], memory_[{spec.name, views[i].asset.symbol}]};
            emit(d, EventKind::DecisionRequested,
                 json{{"agent", spec.name},
                      {"symbol", views[i].asset.symbol},
                      {"phase", phase_name(phase)},
                      {"market_digest", digest},
                      {"recent_actions", ctx.recent_actions.size()}});
            contexts[i].push_back(std::move(ctx));
        }
    }

    std::vector<std::vector<DecisionRecord>> made;
    for (const auto& per_asset : contexts) made.push_back(decide_all(per_asset));

    for (const auto& per_asset : made) {
        for (std::size_t k = 0; k < per_asset.size(); ++k) {
            const auto& r = per_asset[k];
            const auto& spec = cfg_.agents[k];
            json p = decision_to_json(r);
            p["agent"] = persistence::agent_ref_to_json(spec.ref());
            if (spec.framework == Framework::VoteEnsemble) p["members"] = spec.members;
            emit(d, EventKind::DecisionMade, std::move(p));
            if (r.failed)
                emit(d, EventKind::FailureNoted,
                     json{{"agent", r.agent}, {"symbol", r.asset.symbol}, {"reason", r.failure}});
            decisions_.push_back(r);
        }
    }

    std::vector<persistence::SeriesId> filled;
    for (const auto& [asset, bar] : active) {
        for (const auto& spec : cfg_.agents) {
            const auto key = std::make_pair(spec.name, asset.symbol);
            const auto it = pending_.find(key);
            if (it == pending_.end()) continue;
            const Pending& p = it->second;
            const persistence::SeriesId id{spec.name, asset.symbol, p.phase};
            auto lit = ledgers_.find(id);
            if (lit == ledgers_.end())
                lit = ledgers_.emplace(id, ledger::PositionLedger(spec.name, asset, cfg_.fees)).first;
            const auto& rec = lit->second.fill(d, p.signal, p.close, bar.close);
            emit(d, EventKind::FillApplied,
                 json{{"agent", persistence::agent_ref_to_json(spec.ref())},
                      {"symbol", asset.symbol},
                      {"asset_class", std::string(marketdata::to_string(asset.asset_class))},
                      {"phase", phase_name(p.phase)},
                      {"decided_on", p.decided_on.to_string()},
                      {"signal", as_int(p.signal)},
                      {"prev_close", p.close},
                      {"close", bar.close},
                      {"fee_bps", cfg_.fees.fee_bps},
                      {"gross_return", rec.gross_return},
                      {"net_return", rec.net_return},
                      {"equity", rec.equity},
                      {"periods_per_year", cfg_.ppy(asset.asset_class)},
                      {"risk_free", cfg_.risk_free}});
            filled.push_back(id);
        }
    }

    for (const auto& id : filled) {
        if (id.phase != Phase::Live) continue;
        const auto& series = state_.series().at(id);
        emit(d, EventKind::SnapshotEmitted,
             json{{"agent", id.agent},
                  {"symbol", id.symbol},
                  {"phase", phase_name(id.phase)},
                  {"metrics", persistence::snapshot_to_json(series.snapshot())}});
    }

    const auto memory_size = static_cast<std::size_t>(cfg_.protocol.memory_size);
    for (std::size_t i = 0; i < active.size(); ++i) {
        for (const auto& r : made[i]) {
            const auto key = std::make_pair(r.agent, r.asset.symbol);
            pending_[key] = Pending{r.action.signal(), active[i].second.close, r.phase, d};
            auto& mem = memory_[key];
            mem.push_back(r);
            if (mem.size() > memory_size) mem.erase(mem.begin(), mem.end() - static_cast<std::ptrdiff_t>(memory_size));
        }
    }
    last_step_ = d;
}

void Session::run_until(Date last) {
    for (const Date d : schedule_) {
        if (d > last) break;
        if (last_step_ && d <= *last_step_) continue;
        step(d);
    }
}

MarketStore load_market(const RunConfig& cfg) {
    const auto universe = cfg.universe();
    std::vector<marketdata::RawPriceRecord> raws;
    for (const auto& f : cfg.data.price_files) {
        for (auto& r : marketdata::parse_price_csv(text::read_file(cfg.resolve(f))))
            if (universe.contains(r.symbol)) raws.push_back(std::move(r));
    }
    const auto bars = marketdata::normalize_prices(raws, universe, marketdata::SourcePriority(cfg.data.price_sources));
    MarketStore store;
    store.add(bars);
    return store;
}

std::vector<marketdata::NewsItem> load_news(const RunConfig& cfg) {
    const auto universe = cfg.universe();
    std::vector<marketdata::NewsItem> out;
    for (const auto& f : cfg.data.news_files) {
        auto items = marketdata::parse_news_lines(text::read_file(cfg.resolve(f)), universe);
        out.insert(out.end(), std::make_move_iterator(items.begin()), std::make_move_iterator(items.end()));
    }
    return out;
}

} // namespace arena::protocol

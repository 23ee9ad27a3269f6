#include <gtest/gtest.h>

#include <array>
#include <fstream>
#include <random>

#include <nlohmann/json.hpp>

#include "arena/core/errors.hpp"
#include "arena/core/text.hpp"
#include "arena/protocol/action.hpp"
#include "arena/protocol/agents.hpp"
#include "arena/protocol/config.hpp"
#include "arena/protocol/context.hpp"
#include "arena/protocol/decision.hpp"
#include "arena/protocol/market_store.hpp"
#include "arena/protocol/session.hpp"
#include "session_support.hpp"

using namespace arena;
using namespace arena::protocol;
using arena::testkit::StubProvider;
using marketdata::AssetClass;
using marketdata::AssetId;
using persistence::EventKind;

namespace {

const AssetId kTsla = AssetId::make("TSLA", AssetClass::Equity);
const AssetId kBtc = AssetId::make("BTC", AssetClass::Crypto);

DailyContext context(const AssetId& asset, Date d, std::size_t n_bars, std::optional<briefing::DailyBrief> brief = {}) {
    DailyContext ctx;
    ctx.agent = "agent";
    ctx.market.asset = asset;
    ctx.market.date = d;
    ctx.market.run_id = "r";
    for (std::size_t i = 0; i < n_bars; ++i)
        ctx.market.price_history.push_back({asset, d - int(n_bars - 1 - i), 100.0 + double(i) * 1.25, "s"});
    ctx.market.brief = std::move(brief);
    return ctx;
}

ProviderFor single(llm::TextProvider& p) {
    return [&p](const AgentSpec&) -> llm::TextProvider& { return p; };
}

} // namespace

TEST(TradeAction, SignalBijection) {
    EXPECT_EQ(kBuy.signal(), Signal::Long);
    EXPECT_EQ(kSell.signal(), Signal::Short);
    EXPECT_EQ(kHold.signal(), Signal::Flat);
    for (auto a : {kBuy, kSell, kHold}) {
        EXPECT_EQ(TradeAction::from_signal(a.signal()), a);
        EXPECT_EQ(action_from_string(to_string(a)), a);
    }
    EXPECT_THROW(action_from_string("short"), ParseError);
}

TEST(ParseDecision, CanonicalExamples) {
    EXPECT_EQ(parse_decision("…analysis…\n[Decision]: Buy"), kBuy);
    EXPECT_EQ(parse_decision("[decision]:   hold."), kHold);
    EXPECT_THROW(parse_decision("I would buy"), ParseError);
}

TEST(ParseDecision, ReplyFixture) {
    const auto cases = nlohmann::json::parse(text::read_file(testkit::fixture("decisions/replies.json")));
    ASSERT_EQ(cases.size(), 20u);
    for (const auto& c : cases) {
        const auto reply = c.at("reply").get<std::string>();
        if (c.at("expect").is_null()) {
            EXPECT_THROW(parse_decision(reply), ParseError) << reply;
        } else {
            EXPECT_EQ(to_string(parse_decision(reply)), c.at("expect").get<std::string>()) << reply;
        }
    }
}

TEST(MajorityVote, Examples) {
    const std::vector<TradeAction> a = {kBuy, kBuy, kSell, kHold, kBuy};
    EXPECT_EQ(majority_vote(a), kBuy);
    const std::vector<TradeAction> b = {kBuy, kSell, kHold, kHold, kSell};
    EXPECT_EQ(majority_vote(b), kHold);
    const std::vector<TradeAction> c = {kSell, kBuy};
    EXPECT_EQ(majority_vote(c), kHold);
    const std::vector<TradeAction> d = {kSell};
    EXPECT_EQ(majority_vote(d), kSell);
    EXPECT_THROW(majority_vote({}), ValidationError);
}

TEST(MajorityVote, ExhaustiveAgainstCountingOracleAndPermutationInvariant) {
    const std::array<TradeAction, 3> all = {kBuy, kSell, kHold};
    std::mt19937_64 rng(6);
    for (int code = 0; code < 243; ++code) {
        std::vector<TradeAction> v;
        int c = code;
        for (int i = 0; i < 5; ++i, c /= 3) v.push_back(all[c % 3]);
        int nb = 0, ns = 0, nh = 0;
        for (auto a : v) (a == kBuy ? nb : a == kSell ? ns : nh)++;
        TradeAction expect = kHold;
        if (nb > ns && nb > nh) expect = kBuy;
        else if (ns > nb && ns > nh) expect = kSell;
        EXPECT_EQ(majority_vote(v), expect);
        for (int k = 0; k < 5; ++k) {
            std::shuffle(v.begin(), v.end(), rng);
            EXPECT_EQ(majority_vote(v), expect);
        }
    }
}

TEST(DecideWithRetry, SecondReplyWins) {
    StubProvider stub(StubProvider::sequence({"garbage", "[Decision]: Sell"}));
    AgentSpec spec = testkit::agent("llm", Framework::GenericLLM, "m");
    ManualClock clock;
    const auto rec = decide_with_retry(spec, context(kTsla, Date(2025, 8, 5), 3), stub, ProtocolConfig{}, clock);
    EXPECT_EQ(rec.action, kSell);
    EXPECT_EQ(rec.attempts, 2);
    EXPECT_FALSE(rec.failed);
    EXPECT_EQ(rec.raw_reply, "[Decision]: Sell");
    EXPECT_EQ(stub.calls(), 2u);
}

TEST(DecideWithRetry, ExhaustionIsFlaggedHold) {
    StubProvider stub(StubProvider::constant("no idea"));
    ManualClock clock;
    const auto rec = decide_with_retry(testkit::agent("llm", Framework::GenericLLM, "m"),
                                       context(kTsla, Date(2025, 8, 5), 3), stub, ProtocolConfig{}, clock);
    EXPECT_EQ(stub.calls(), 4u);
    EXPECT_EQ(rec.attempts, 4);
    EXPECT_EQ(rec.action, kHold);
    EXPECT_TRUE(rec.failed);
    EXPECT_FALSE(rec.failure.empty());
}

TEST(DecideWithRetry, CallBoundAndIdenticalRequests) {
    ManualClock clock;
    for (int limit = 0; limit <= 5; ++limit) {
        StubProvider stub(StubProvider::failing());
        ProtocolConfig cfg;
        cfg.retry_limit = limit;
        cfg.temperature = 0.5;
        const auto rec = decide_with_retry(testkit::agent("llm", Framework::GenericLLM, "m"),
                                           context(kBtc, Date(2025, 8, 5), 7), stub, cfg, clock);
        EXPECT_EQ(stub.calls(), std::size_t(limit + 1));
        EXPECT_TRUE(rec.failed);
        const auto reqs = stub.requests();
        for (std::size_t i = 0; i < reqs.size(); ++i) {
            EXPECT_EQ(reqs[i].system, reqs[0].system);
            EXPECT_EQ(reqs[i].user, reqs[0].user);
            EXPECT_EQ(reqs[i].temperature, 0.5);
            EXPECT_EQ(reqs[i].key.attempt, int(i) + 1);
        }
    }
}

TEST(DecideWithRetry, LatencyFromInjectedClock) {
    ManualClock clock;
    StubProvider stub([&clock](const llm::CompletionRequest&) {
        clock.advance(std::chrono::milliseconds{120});
        return std::string("[Decision]: Buy");
    });
    const auto rec = decide_with_retry(testkit::agent("llm", Framework::GenericLLM, "m"),
                                       context(kBtc, Date(2025, 8, 5), 2), stub, ProtocolConfig{}, clock);
    EXPECT_EQ(rec.latency, std::chrono::milliseconds{120});
}

TEST(DecisionPrompt, TemplateSubstitution) {
    const auto p = build_decision_prompt(context(kTsla, Date(2025, 8, 5), 7)).text();
    EXPECT_NE(p.find("TSLA"), std::string::npos);
    EXPECT_NE(p.find("[Decision]:"), std::string::npos);
    EXPECT_NE(p.find("Indicates a bullish outlook or perceived undervaluation"), std::string::npos);
    EXPECT_NE(p.find("professional financial decision-making agent"), std::string::npos);
    std::size_t lines = 0;
    for (const auto& l : text::split_lines(p)) lines += l.starts_with("- 2025-");
    EXPECT_EQ(lines, 7u);
    EXPECT_NE(p.find(kNoBriefMarker), std::string::npos);
}

TEST(DecisionPrompt, BriefReplacesMarker) {
    briefing::DailyBrief b{kTsla, Date(2025, 8, 5), "Deliveries beat estimates.", {"deliveries"},
                           briefing::Sentiment::Bullish, {"id"}};
    const auto p = build_decision_prompt(context(kTsla, Date(2025, 8, 5), 3, b)).text();
    EXPECT_NE(p.find("Deliveries beat estimates."), std::string::npos);
    EXPECT_EQ(p.find(kNoBriefMarker), std::string::npos);
}

TEST(DecisionPrompt, EveryCloseAppearsVerbatim) {
    std::mt19937_64 rng(50);
    std::uniform_real_distribution<double> px(0.01, 250000.0);
    for (int trial = 0; trial < 50; ++trial) {
        auto ctx = context(trial % 2 ? kBtc : kTsla, Date(2025, 8, 20), 0);
        const std::size_t n = 1 + rng() % 7;
        for (std::size_t i = 0; i < n; ++i)
            ctx.market.price_history.push_back({ctx.market.asset, Date(2025, 8, 10) + int(i), px(rng), "s"});
        const auto p = build_decision_prompt(ctx).text();
        for (const auto& b : ctx.market.price_history)
            EXPECT_NE(p.find(text::format_double(b.close)), std::string::npos) << b.close;
    }
}

TEST(Agents, BaselinesAndScript) {
    const auto ctx = context(kBtc, Date(2025, 8, 5), 1);
    BuyAndHoldAgent bh(testkit::agent("bh", Framework::BuyAndHold));
    AlwaysHoldAgent ah(testkit::agent("ah", Framework::AlwaysHold));
    EXPECT_EQ(bh.decide(ctx).action, kBuy);
    EXPECT_EQ(ah.decide(ctx).action, kHold);
    const auto script = parse_script_csv("date,action\n2025-08-05,SELL\n2025-08-06,buy\n");
    auto spec = testkit::agent("s", Framework::Scripted);
    spec.params["script"] = "x.csv";
    ScriptedAgent sa(spec, script);
    EXPECT_EQ(sa.decide(ctx).action, kSell);
    const auto missing = sa.decide(context(kBtc, Date(2025, 8, 9), 1));
    EXPECT_EQ(missing.action, kHold);
    EXPECT_TRUE(missing.failed);
    EXPECT_THROW(parse_script_csv("date,action\n2025-08-05,SHORT\n"), ParseError);
}

TEST(Agents, VoteOverMembers) {
    auto ens = testkit::agent("vote", Framework::VoteEnsemble);
    ens.members = {"a", "b", "c"};
    const auto ctx = context(kBtc, Date(2025, 8, 5), 1);
    std::vector<DecisionRecord> members(3);
    members[0].action = kSell;
    members[1].action = kSell;
    members[2].action = kBuy;
    EXPECT_EQ(vote_decision(ens, ctx, members).action, kSell);
    members[1].action = kHold;  // e.g. a failed member accounted as HOLD
    members[1].failed = true;
    EXPECT_EQ(vote_decision(ens, ctx, members).action, kHold);
}

TEST(RunConfig, FromJsonDefaultsAndValidation) {
    const auto j = nlohmann::json::parse(R"({
        "run_id": "r1",
        "assets": [{"symbol": "tsla", "class": "Equity"}, {"symbol": "BTC", "class": "Crypto"}],
        "live_start": "2025-08-01", "end": "2025-09-30", "holidays": ["2025-09-01"],
        "agents": [{"name": "bh", "framework": "BuyAndHold"},
                   {"name": "g", "framework": "GenericLLM", "backbone": "gpt-4o"}]
    })");
    const auto cfg = RunConfig::from_json(j);
    EXPECT_EQ(cfg.assets[0].symbol, "TSLA");
    EXPECT_EQ(cfg.warmup_start, Date(2025, 8, 1) - 90);
    EXPECT_EQ(cfg.protocol.temperature, 0.5);
    EXPECT_EQ(cfg.protocol.retry_limit, 3);
    EXPECT_EQ(cfg.protocol.warmup_days, 90);
    EXPECT_EQ(cfg.protocol.memory_size, 7);
    EXPECT_EQ(cfg.ppy(AssetClass::Equity), 252.0);
    EXPECT_EQ(cfg.ppy(AssetClass::Crypto), 365.0);
    EXPECT_EQ(cfg.fees.fee_bps, 0.0);
    EXPECT_EQ(RunConfig::from_json(cfg.to_json()).to_json(), cfg.to_json());

    auto dup = j;
    dup["agents"][1]["name"] = "bh";
    EXPECT_THROW(RunConfig::from_json(dup), ConfigError);
    auto no_backbone = j;
    no_backbone["agents"][1].erase("backbone");
    EXPECT_THROW(RunConfig::from_json(no_backbone), ConfigError);
    auto bad_vote = j;
    bad_vote["agents"].push_back({{"name", "v"}, {"framework", "VoteEnsemble"}, {"members", {"nobody"}}});
    EXPECT_THROW(RunConfig::from_json(bad_vote), ConfigError);
    auto bad_retry = j;
    bad_retry["protocol"] = {{"retry_limit", -1}};
    EXPECT_THROW(RunConfig::from_json(bad_retry), ConfigError);
    auto bad_memory = j;
    bad_memory["protocol"] = {{"memory_size", 0}};
    EXPECT_THROW(RunConfig::from_json(bad_memory), ConfigError);
}

TEST(RunConfig, LoadsBundledFixture) {
    const auto cfg = RunConfig::load(testkit::fixture("three_day/config.json"));
    EXPECT_EQ(cfg.run_id, "three-day");
    EXPECT_EQ(cfg.agents.size(), 2u);
    EXPECT_EQ(cfg.assets.size(), 2u);
    EXPECT_EQ(cfg.fees.fee_bps, 10.0);
    EXPECT_EQ(cfg.resolve("prices.csv"), testkit::fixture("three_day/prices.csv"));
}

TEST(MarketStore, HistoryAndWithholding) {
    MarketStore m;
    m.add(testkit::bars(kBtc, Date(2025, 8, 1), {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}));
    const auto h = m.history("BTC", Date(2025, 8, 9), 7);
    ASSERT_EQ(h.size(), 7u);
    EXPECT_EQ(h.front().date, Date(2025, 8, 3));
    EXPECT_EQ(h.back().date, Date(2025, 8, 9));
    EXPECT_EQ(m.history("BTC", Date(2025, 8, 2), 7).size(), 2u);
    EXPECT_TRUE(m.history("ETH", Date(2025, 8, 9), 7).empty());
    const auto cut = m.withheld_after(Date(2025, 8, 4));
    EXPECT_EQ(cut.size(), 4u);
    EXPECT_FALSE(cut.bar("BTC", Date(2025, 8, 5)).has_value());
}

TEST(Session, BuyAndHoldThreeDays) {
    auto cfg = testkit::run_config({kBtc}, Date(2025, 8, 1), Date(2025, 8, 3),
                                   {testkit::agent("bh", Framework::BuyAndHold)});
    MarketStore market;
    market.add(testkit::bars(kBtc, Date(2025, 8, 1), {100, 110, 99}));
    NoBriefs briefs;
    ManualClock clock;
    persistence::EventLog log;
    StubProvider unused(StubProvider::failing());
    Session s(cfg, market, briefs, single(unused), clock, log);
    s.run();
    std::vector<std::string> actions;
    for (const auto& d : s.decisions()) actions.push_back(std::string(to_string(d.action)));
    EXPECT_EQ(actions, (std::vector<std::string>{"BUY", "BUY", "BUY"}));
    const auto returns = s.state().live_returns();
    ASSERT_EQ(returns.size(), 2u);
    EXPECT_DOUBLE_EQ(returns[0].net_return, 0.10);
    EXPECT_DOUBLE_EQ(returns[1].net_return, -0.10);
    EXPECT_EQ(returns[1].date, Date(2025, 8, 3));
}

TEST(Session, EventOrderWithinDates) {
    auto cfg = testkit::run_config({kTsla, kBtc}, Date(2025, 8, 4), Date(2025, 8, 6),
                                   {testkit::agent("bh", Framework::BuyAndHold), testkit::agent("ah", Framework::AlwaysHold)});
    MarketStore market;
    market.add(testkit::bars(kTsla, Date(2025, 8, 4), {10, 11, 12}));
    market.add(testkit::bars(kBtc, Date(2025, 8, 4), {5, 6, 7}));
    NoBriefs briefs;
    ManualClock clock;
    persistence::EventLog log;
    StubProvider unused(StubProvider::failing());
    Session(cfg, market, briefs, single(unused), clock, log).run();
    const auto events = log.events();
    for (std::size_t i = 0; i < events.size(); ++i) EXPECT_EQ(events[i].seq, i + 1);
    for (std::size_t i = 1; i < events.size(); ++i) {
        ASSERT_LE(events[i - 1].date, events[i].date);
        if (events[i - 1].date == events[i].date) {
            const auto a = persistence::stage_of(events[i - 1].kind), b = persistence::stage_of(events[i].kind);
            if (a && b) EXPECT_LE(*a, *b);
        }
    }
    // decisions follow configured agent order within each asset
    std::vector<std::string> order;
    for (const auto& e : events)
        if (e.kind == EventKind::DecisionMade && e.date == Date(2025, 8, 4))
            order.push_back(e.payload.at("symbol").get<std::string>() + "/" +
                            e.payload.at("agent").at("name").get<std::string>());
    EXPECT_EQ(order, (std::vector<std::string>{"TSLA/bh", "TSLA/ah", "BTC/bh", "BTC/ah"}));
}

TEST(Session, AgentsSeeIdenticalMarketInputs) {
    auto cfg = testkit::run_config({kTsla, kBtc}, Date(2025, 8, 4), Date(2025, 8, 8),
                                   {testkit::agent("bh", Framework::BuyAndHold), testkit::agent("g1", Framework::GenericLLM, "m1"),
                                    testkit::agent("g2", Framework::GenericLLM, "m2")});
    MarketStore market;
    market.add(testkit::bars(kTsla, Date(2025, 7, 20), std::vector<double>(20, 0.0 + 250.5)));
    market.add(testkit::bars(kBtc, Date(2025, 7, 20), std::vector<double>(20, 118000.25)));
    MemoryBriefSource briefs;
    briefs.put({kBtc, Date(2025, 8, 5), "Funds bought.", {"flows"}, briefing::Sentiment::Bullish, {"x"}});
    ManualClock clock;
    persistence::EventLog log;
    StubProvider stub(testkit::prompt_hash_replies());
    Session s(cfg, market, briefs, single(stub), clock, log);
    std::map<std::pair<std::string, Date>, std::vector<DailyContext>> seen;
    s.on_context([&](const DailyContext& c) { seen[{c.market.asset.symbol, c.market.date}].push_back(c); });
    s.run();
    ASSERT_FALSE(seen.empty());
    for (const auto& [key, ctxs] : seen) {
        ASSERT_EQ(ctxs.size(), 3u);
        for (const auto& c : ctxs) EXPECT_EQ(c.market, ctxs[0].market);
        EXPECT_LE(ctxs[0].market.price_history.size(), 7u);
        EXPECT_EQ(ctxs[0].market.price_history.back().date, key.second);
        EXPECT_EQ(ctxs[0].market.brief.has_value(), key == std::make_pair(std::string("BTC"), Date(2025, 8, 5)));
    }
}

TEST(Session, WarmUpExcludedFromLiveMetrics) {
    auto cfg = testkit::run_config({kBtc}, Date(2025, 8, 4), Date(2025, 8, 8), {testkit::agent("bh", Framework::BuyAndHold)},
                                   Date(2025, 8, 1));
    MarketStore market;
    market.add(testkit::bars(kBtc, Date(2025, 8, 1), {100, 50, 25, 20, 22, 24, 26, 28}));
    NoBriefs briefs;
    ManualClock clock;
    persistence::EventLog log;
    StubProvider unused(StubProvider::failing());
    Session s(cfg, market, briefs, single(unused), clock, log);
    s.run();
    const auto live = s.state().live_returns();
    ASSERT_EQ(live.size(), 4u);
    EXPECT_EQ(live.front().date, Date(2025, 8, 5));  // realizes the first live decision
    const auto rows = s.state().live_rows();
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_NEAR(rows[0].metrics.cr, 28.0 / 20.0 - 1.0, 1e-12);
    // no live snapshot is computed from a fill opened during warm-up
    for (const auto& e : log.events())
        if (e.kind == EventKind::FillApplied && e.payload.at("phase") == "Live")
            EXPECT_GE(Date::parse(e.payload.at("decided_on").get<std::string>()), cfg.live_start);
    // memories carry over: the first live context already lists warm-up actions
    std::size_t recent = 0;
    for (const auto& e : log.events())
        if (e.kind == EventKind::DecisionRequested && e.date == cfg.live_start) recent = e.payload.at("recent_actions");
    EXPECT_EQ(recent, 3u);
}

TEST(Session, MissingPriceIsAGapAndPositionCarries) {
    auto cfg = testkit::run_config({kBtc}, Date(2025, 8, 1), Date(2025, 8, 4), {testkit::agent("bh", Framework::BuyAndHold)});
    MarketStore market;
    market.add(std::vector<marketdata::PriceBar>{{kBtc, Date(2025, 8, 1), 100, "f"}, {kBtc, Date(2025, 8, 2), 110, "f"},
                                                 {kBtc, Date(2025, 8, 4), 121, "f"}});
    NoBriefs briefs;
    ManualClock clock;
    persistence::EventLog log;
    StubProvider unused(StubProvider::failing());
    Session s(cfg, market, briefs, single(unused), clock, log);
    s.run();
    EXPECT_EQ(s.state().gap_count(), 1u);
    for (const auto& e : log.events())
        if (e.date == Date(2025, 8, 3)) EXPECT_EQ(e.kind, EventKind::GapNoted);
    const auto r = s.state().live_returns();
    ASSERT_EQ(r.size(), 2u);
    EXPECT_DOUBLE_EQ(r[1].net_return, 0.10);  // 110 -> 121 across the gap
    EXPECT_EQ(r[1].date, Date(2025, 8, 4));
}

TEST(Session, VoteEnsembleFollowsMembers) {
    testkit::TempDir dir;
    text::write_file(dir.str("a.csv"), "date,action\n2025-08-01,BUY\n2025-08-02,SELL\n2025-08-03,HOLD\n");
    text::write_file(dir.str("b.csv"), "date,action\n2025-08-01,BUY\n2025-08-02,SELL\n2025-08-03,BUY\n");
    text::write_file(dir.str("c.csv"), "date,action\n2025-08-01,SELL\n2025-08-02,HOLD\n");
    std::vector<AgentSpec> agents;
    for (const char* n : {"a", "b", "c"}) {
        auto spec = testkit::agent(n, Framework::Scripted);
        spec.params["script"] = std::string(n) + ".csv";
        agents.push_back(spec);
    }
    auto vote = testkit::agent("vote", Framework::VoteEnsemble);
    vote.members = {"a", "b", "c"};
    agents.insert(agents.begin(), vote);  // ensemble listed first still sees its members' decisions
    auto cfg = testkit::run_config({kBtc}, Date(2025, 8, 1), Date(2025, 8, 3), agents);
    cfg.base_dir = dir.str();
    MarketStore market;
    market.add(testkit::bars(kBtc, Date(2025, 8, 1), {10, 11, 12}));
    NoBriefs briefs;
    ManualClock clock;
    persistence::EventLog log;
    StubProvider unused(StubProvider::failing());
    Session s(cfg, market, briefs, single(unused), clock, log);
    s.run();
    std::vector<std::string> votes;
    for (const auto& d : s.decisions())
        if (d.agent == "vote") votes.push_back(std::string(to_string(d.action)));
    // day 3: a HOLD, b BUY, c missing -> flagged HOLD => HOLD 2 vs BUY 1
    EXPECT_EQ(votes, (std::vector<std::string>{"BUY", "SELL", "HOLD"}));
    EXPECT_EQ(s.state().failure_count(), 1u);
}

TEST(Session, UnavailableBriefGivesNoBriefContext) {
    auto cfg = testkit::run_config({kBtc}, Date(2025, 8, 1), Date(2025, 8, 2),
                                   {testkit::agent("g", Framework::GenericLLM, "m")});
    MarketStore market;
    market.add(testkit::bars(kBtc, Date(2025, 8, 1), {1, 2}));
    StubProvider summarizer(StubProvider::failing());
    SummarizingBriefSource briefs(summarizer, {0.5, 3});
    const std::vector<marketdata::NewsItem> news = {marketdata::make_news_item(
        kBtc, parse_timestamp("2025-08-01T10:00:00Z"), "Headline", "Body", "s", "u")};
    briefs.add_news(news);
    StubProvider llm(StubProvider::constant("[Decision]: Buy"));
    ManualClock clock;
    persistence::EventLog log;
    Session s(cfg, market, briefs, single(llm), clock, log);
    s.step(Date(2025, 8, 1));
    EXPECT_EQ(summarizer.calls(), 4u);
    bool saw = false;
    for (const auto& e : log.events())
        if (e.kind == EventKind::BriefPublished) {
            saw = true;
            EXPECT_FALSE(e.payload.at("available").get<bool>());
        }
    EXPECT_TRUE(saw);
    EXPECT_NE(llm.requests().at(0).user.find(kNoBriefMarker), std::string::npos);
}

TEST(Session, PublishedBriefsCiteOnlySameDayNews) {
    auto cfg = testkit::run_config({kBtc}, Date(2025, 8, 1), Date(2025, 8, 3),
                                   {testkit::agent("g", Framework::GenericLLM, "m")});
    MarketStore market;
    market.add(testkit::bars(kBtc, Date(2025, 8, 1), {1, 2, 3}));
    StubProvider summarizer(StubProvider::constant("Summary.\nSentiment: Bearish"));
    SummarizingBriefSource briefs(summarizer, {0.5, 3});
    std::vector<marketdata::NewsItem> news;
    for (int d = 1; d <= 3; ++d)
        for (int h : {1, 23})
            news.push_back(marketdata::make_news_item(kBtc, parse_timestamp("2025-08-0" + std::to_string(d) + "T" +
                                                                            (h < 10 ? "0" : "") + std::to_string(h) + ":30:00Z"),
                                                      "t" + std::to_string(d * 100 + h), "b", "s", ""));
    briefs.add_news(news);
    StubProvider llm(StubProvider::constant("[Decision]: Hold"));
    ManualClock clock;
    persistence::EventLog log;
    Session(cfg, market, briefs, single(llm), clock, log).run();
    std::map<std::string, Timestamp> published;
    for (const auto& n : news) published[n.id] = n.published;
    std::size_t checked = 0;
    for (const auto& e : log.events()) {
        if (e.kind != EventKind::BriefPublished) continue;
        for (const auto& id : e.payload.at("brief").at("source_item_ids")) {
            EXPECT_LE(published.at(id.get<std::string>()), end_of_day(e.date));
            EXPECT_EQ(date_of(published.at(id.get<std::string>())), e.date);
            ++checked;
        }
    }
    EXPECT_EQ(checked, 6u);
}

namespace {

struct Recorded {
    std::string log_bytes;
    std::vector<DecisionRecord> decisions;
};

Recorded run_hashing_session(const MarketStore& source, std::optional<Date> cutoff) {
    auto cfg = testkit::run_config({kTsla, kBtc}, Date(2025, 8, 6), Date(2025, 8, 20),
                                   {testkit::agent("g1", Framework::GenericLLM, "m1"),
                                    testkit::agent("g2", Framework::GenericLLM, "m2"),
                                    testkit::agent("bh", Framework::BuyAndHold)},
                                   Date(2025, 8, 1));
    MarketStore market = cutoff ? source.withheld_after(*cutoff) : source;
    MemoryBriefSource briefs;
    for (int d = 1; d <= 20; d += 3)
        briefs.put({kTsla, Date(2025, 8, d), "Brief " + std::to_string(d), {"t"}, briefing::Sentiment::Neutral, {"id"}});
    StubProvider stub(testkit::prompt_hash_replies());
    ManualClock clock;
    persistence::EventLog log;
    Session s(cfg, market, briefs, single(stub), clock, log);
    if (cutoff) s.run_until(*cutoff);
    else s.run();
    return {log.bytes(), s.decisions()};
}

MarketStore random_market() {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> step(-0.05, 0.05);
    MarketStore m;
    double t = 300, b = 115000;
    for (int d = 0; d < 20; ++d) {
        t *= 1 + step(rng);
        b *= 1 + step(rng);
        m.add(std::vector<marketdata::PriceBar>{{kTsla, Date(2025, 8, 1) + d, t, "f"},
                                                {kBtc, Date(2025, 8, 1) + d, b, "f"}});
    }
    return m;
}

} // namespace

TEST(Session, RecordedRunsAreByteIdentical) {
    const auto market = random_market();
    const auto a = run_hashing_session(market, std::nullopt);
    const auto b = run_hashing_session(market, std::nullopt);
    EXPECT_FALSE(a.log_bytes.empty());
    EXPECT_EQ(a.log_bytes, b.log_bytes);
    EXPECT_EQ(a.decisions, b.decisions);
}

TEST(Session, NoLookAhead) {
    const auto market = random_market();
    const auto full = run_hashing_session(market, std::nullopt);
    for (int k = 0; k < 20; k += 4) {
        const Date cutoff = Date(2025, 8, 1) + k;
        const auto partial = run_hashing_session(market, cutoff);
        std::vector<DecisionRecord> expect;
        for (const auto& d : full.decisions)
            if (d.date <= cutoff) expect.push_back(d);
        EXPECT_EQ(partial.decisions, expect) << cutoff.to_string();
    }
}

TEST(Session, ParallelDecisionsMatchSerial) {
    const auto market = random_market();
    auto cfg = testkit::run_config({kTsla, kBtc}, Date(2025, 8, 3), Date(2025, 8, 12),
                                   {testkit::agent("g1", Framework::GenericLLM, "m1"),
                                    testkit::agent("g2", Framework::GenericLLM, "m2")});
    std::string bytes[2];
    for (int parallel = 0; parallel < 2; ++parallel) {
        MarketStore m = market;
        NoBriefs briefs;
        StubProvider stub(testkit::prompt_hash_replies());
        ManualClock clock;
        persistence::EventLog log;
        Session(cfg, m, briefs, single(stub), clock, log, SessionOptions{parallel == 1}).run();
        bytes[parallel] = log.bytes();
    }
    EXPECT_EQ(bytes[0], bytes[1]);
}

TEST(Session, RejectsReprocessingADate) {
    auto cfg = testkit::run_config({kBtc}, Date(2025, 8, 1), Date(2025, 8, 3), {testkit::agent("bh", Framework::BuyAndHold)});
    MarketStore market;
    market.add(testkit::bars(kBtc, Date(2025, 8, 1), {1, 2, 3}));
    NoBriefs briefs;
    ManualClock clock;
    persistence::EventLog log;
    StubProvider unused(StubProvider::failing());
    Session s(cfg, market, briefs, single(unused), clock, log);
    s.step(Date(2025, 8, 2));
    EXPECT_THROW(s.step(Date(2025, 8, 2)), ValidationError);
    EXPECT_THROW(s.step(Date(2025, 8, 1)), ValidationError);
}

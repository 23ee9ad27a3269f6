#include <gtest/gtest.h>

#include <random>

#include "arena/core/errors.hpp"
#include "arena/ledger/ledger.hpp"

using namespace arena;
using namespace arena::ledger;

namespace {

const marketdata::AssetId kTsla = marketdata::AssetId::make("TSLA", marketdata::AssetClass::Equity);

std::vector<double> random_path(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<double> start(5.0, 500.0), step(-0.2, 0.2);
    std::vector<double> p{start(rng)};
    while (p.size() < n) p.push_back(p.back() * (1.0 + step(rng)));
    return p;
}

double run_path(const std::vector<double>& prices, const std::vector<Signal>& signals, double fee_bps) {
    PositionLedger l("a", kTsla, FeeModel{fee_bps});
    for (std::size_t t = 1; t < prices.size(); ++t) l.fill(Date(2025, 1, 1) + int(t), signals[t - 1], prices[t - 1], prices[t]);
    return l.equity() - 1.0;
}

} // namespace

TEST(DailyReturn, Formula) {
    EXPECT_DOUBLE_EQ(daily_return(Signal::Long, 100, 110), 0.10);
    EXPECT_DOUBLE_EQ(daily_return(Signal::Short, 100, 110), -0.10);
    EXPECT_EQ(daily_return(Signal::Flat, 100, 57), 0.0);
    EXPECT_THROW(daily_return(Signal::Long, 0, 110), ValidationError);
    EXPECT_THROW(daily_return(Signal::Long, 100, -1), ValidationError);
}

TEST(ApplyFees, Examples) {
    EXPECT_DOUBLE_EQ(apply_fees(0.10, true, FeeModel{10}), 1.10 * 0.999 - 1);
    EXPECT_NEAR(apply_fees(0.10, true, FeeModel{10}), 0.0989, 1e-12);
    EXPECT_EQ(apply_fees(0.10, false, FeeModel{10}), 0.10);
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> g(-0.9, 0.9);
    for (int i = 0; i < 100; ++i) {
        const double x = g(rng);
        EXPECT_EQ(apply_fees(x, true, FeeModel{0}), x);
        EXPECT_EQ(apply_fees(x, false, FeeModel{0}), x);
    }
}

TEST(UpdateEquity, Examples) {
    const EquityPoint start{Date(2025, 8, 1), 1.0, 0.0};
    const auto p = update_equity(start, 0.045, Date(2025, 8, 2));
    EXPECT_DOUBLE_EQ(p.equity, 1.045);
    EXPECT_EQ(p.cumulative_return, p.equity - 1.0);
    const auto q = update_equity(update_equity(start, 0.10, Date(2025, 8, 2)), -0.05, Date(2025, 8, 3));
    EXPECT_DOUBLE_EQ(q.equity, 1.045);
    EXPECT_THROW(update_equity(start, -1.0, Date(2025, 8, 2)), ValidationError);
    EXPECT_THROW(update_equity(start, -1.5, Date(2025, 8, 2)), ValidationError);
}

TEST(UpdateEquity, MatchesProductOracle) {
    std::mt19937_64 rng(1000);
    std::uniform_real_distribution<double> r(-0.5, 0.5);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 1 + rng() % 64;
        EquityPoint p{Date(2025, 1, 1), 1.0, 0.0};
        double oracle = 1.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double x = r(rng);
            p = update_equity(p, x, p.date + 1);
            oracle *= 1.0 + x;
            EXPECT_GT(p.equity, 0.0);
            EXPECT_EQ(p.cumulative_return, p.equity - 1.0);
        }
        EXPECT_NEAR(p.equity, oracle, 1e-12);
    }
}

TEST(PositionLedger, FeesOnlyOnPositionChanges) {
    PositionLedger l("a", kTsla, FeeModel{10});
    const auto& r1 = l.fill(Date(2025, 8, 2), Signal::Long, 100, 110);  // flat -> long
    EXPECT_DOUBLE_EQ(r1.net_return, 1.10 * 0.999 - 1);
    const auto& r2 = l.fill(Date(2025, 8, 3), Signal::Long, 110, 121);  // unchanged
    EXPECT_DOUBLE_EQ(r2.net_return, 0.10);
    const auto& r3 = l.fill(Date(2025, 8, 4), Signal::Flat, 121, 100);  // long -> flat
    EXPECT_DOUBLE_EQ(r3.net_return, 0.999 - 1);
    EXPECT_EQ(l.last_signal(), Signal::Flat);
    EXPECT_EQ(l.records().size(), 3u);
    EXPECT_DOUBLE_EQ(l.gross_equity(), 1.10 * 1.10);
    EXPECT_EQ(l.records().back().equity, l.equity());
}

TEST(PositionLedger, BuyAndHoldIdentity) {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = random_path(rng, 2 + rng() % 63);
        const std::vector<Signal> longs(p.size(), Signal::Long);
        EXPECT_NEAR(run_path(p, longs, 0), p.back() / p.front() - 1.0, 1e-12);
    }
}

TEST(PositionLedger, AlwaysHoldIdentity) {
    std::mt19937_64 rng(78);
    const auto p = random_path(rng, 40);
    PositionLedger l("a", kTsla, FeeModel{25});
    for (std::size_t t = 1; t < p.size(); ++t) {
        const auto& r = l.fill(Date(2025, 1, 1) + int(t), Signal::Flat, p[t - 1], p[t]);
        EXPECT_EQ(r.net_return, 0.0);
        EXPECT_EQ(r.equity, 1.0);
    }
}

TEST(PositionLedger, ShortIsPerDayNegation) {
    std::mt19937_64 rng(79);
    const auto p = random_path(rng, 30);
    for (std::size_t t = 1; t < p.size(); ++t)
        EXPECT_EQ(daily_return(Signal::Short, p[t - 1], p[t]), -daily_return(Signal::Long, p[t - 1], p[t]));
    const std::vector<Signal> longs(p.size(), Signal::Long), shorts(p.size(), Signal::Short);
    // cumulative returns are not negations of each other
    EXPECT_NE(run_path(p, shorts, 0), -run_path(p, longs, 0));
}

TEST(PositionLedger, FeeMonotonicity) {
    std::mt19937_64 rng(80);
    for (int trial = 0; trial < 100; ++trial) {
        const auto p = random_path(rng, 2 + rng() % 40);
        std::vector<Signal> s;
        for (std::size_t i = 0; i < p.size(); ++i) s.push_back(signal_from_int(int(rng() % 3) - 1));
        double prev = run_path(p, s, 0);
        for (double bps : {1.0, 5.0, 10.0, 50.0, 200.0}) {
            const double cr = run_path(p, s, bps);
            EXPECT_LE(cr, prev);
            prev = cr;
        }
    }
}

TEST(ReturnsCsv, Format) {
    PositionLedger l("agent,x", kTsla);
    l.fill(Date(2025, 8, 2), Signal::Short, 100, 110);
    EXPECT_EQ(write_returns_csv(l.records()),
              "agent,asset,date,signal,gross_return,net_return,equity\n"
              "\"agent,x\",TSLA,2025-08-02,-1,-0.1,-0.1,0.9\n");
}

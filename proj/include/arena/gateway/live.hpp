#pragma once

#include <chrono>
#include <functional>
#include <memory>
#include <vector>

#include "arena/core/clock.hpp"
#include "arena/gateway/registry.hpp"
#include "arena/marketdata/connector.hpp"
#include "arena/protocol/session.hpp"

namespace arena::gateway {

struct LiveFeeds {
    std::vector<marketdata::PriceConnector*> prices;
    std::vector<marketdata::NewsConnector*> news;
};

/// Drives a session on the clock: at each scheduled date's decision time it
/// pulls that date's data from the feeds and runs one protocol tick. Feed
/// failures surface as gap notes and provider failures as failure notes; the
/// loop keeps going. A stop request ends the run after the current tick.
class LiveRunner {
public:
    LiveRunner(protocol::Session& session, protocol::MarketStore& market, LiveFeeds feeds, RunHandle& handle,
               Clock& clock, protocol::SummarizingBriefSource* news_sink = nullptr);

    /// Blocks until the schedule is exhausted, a stop is requested or a
    /// tick throws (status Failed). Returns the final status.
    RunStatus run();

    /// Longest single wait, so stop requests are noticed promptly.
    void set_poll_interval(std::chrono::milliseconds d) { poll_ = d; }
    /// Called after every tick with the date processed.
    void on_tick(std::function<void(Date)> f) { on_tick_ = std::move(f); }

private:
    bool wait_for(TimePoint deadline);
    void ingest(Date d);

    protocol::Session& session_;
    protocol::MarketStore& market_;
    LiveFeeds feeds_;
    RunHandle& handle_;
    Clock& clock_;
    protocol::SummarizingBriefSource* news_sink_;
    std::chrono::milliseconds poll_{1000};
    std::function<void(Date)> on_tick_;
};

} // namespace arena::gateway

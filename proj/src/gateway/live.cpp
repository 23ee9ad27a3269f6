#include "arena/gateway/live.hpp"

#include <algorithm>
#include <iostream>

#include "arena/core/errors.hpp"

namespace arena::gateway {

LiveRunner::LiveRunner(protocol::Session& session, protocol::MarketStore& market, LiveFeeds feeds, RunHandle& handle,
                       Clock& clock, protocol::SummarizingBriefSource* news_sink)
    : session_(session), market_(market), feeds_(std::move(feeds)), handle_(handle), clock_(clock),
      news_sink_(news_sink) {}

bool LiveRunner::wait_for(TimePoint deadline) {
    while (clock_.now() < deadline) {
        if (handle_.stop_requested()) return false;
        clock_.sleep_until(std::min(deadline, clock_.now() + poll_));
    }
    return !handle_.stop_requested();
}

void LiveRunner::ingest(Date d) {
    const auto& cfg = session_.config();
    const auto universe = cfg.universe();
    const marketdata::SourcePriority priority(cfg.data.price_sources);
    for (const auto& asset : cfg.assets) {
        auto prices = marketdata::collect_prices(feeds_.prices, asset, d, d);
        for (const auto& f : prices.failures)
            std::cerr << "feed " << f.source << " failed for " << asset.symbol << " on " << d.to_string() << ": "
                      << f.message << "\n";
        std::vector<marketdata::PriceBar> bars;
        try {
            bars = marketdata::normalize_prices(prices.records, universe, priority);
        } catch (const ValidationError& e) {
            std::cerr << "rejected prices for " << asset.symbol << ": " << e.what() << "\n";
        }
        market_.add(bars);

        if (news_sink_ != nullptr && !feeds_.news.empty()) {
            auto news = marketdata::collect_news(feeds_.news, asset, d, d);
            for (const auto& f : news.failures)
                std::cerr << "news feed " << f.source << " failed for " << asset.symbol << ": " << f.message << "\n";
            news_sink_->add_news(news.records);
        }
    }
}

RunStatus LiveRunner::run() {
    const auto& cfg = session_.config();
    try {
        for (const Date d : session_.schedule()) {
            if (session_.last_step() && d <= *session_.last_step()) continue;
            const TimePoint deadline = std::chrono::time_point_cast<std::chrono::milliseconds>(
                d.sys_days() + cfg.protocol.decision_time);
            if (!wait_for(deadline)) break;
            if (session_.phase_of(d) == Phase::Live && handle_.status() == RunStatus::WarmingUp)
                handle_.transition(RunStatus::Running);
            ingest(d);
            session_.step(d);
            handle_.publish(std::make_shared<const persistence::ArenaState>(session_.state()));
            if (on_tick_) on_tick_(d);
            if (handle_.stop_requested()) break;
        }
        handle_.transition(RunStatus::Stopped);
    } catch (const std::exception& e) {
        handle_.publish(std::make_shared<const persistence::ArenaState>(session_.state()));
        handle_.fail(e.what());
    }
    return handle_.status();
}

} // namespace arena::gateway

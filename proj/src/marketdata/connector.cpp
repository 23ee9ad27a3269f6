#include "arena/marketdata/connector.hpp"

#include <future>

#include "arena/core/errors.hpp"
#include "arena/core/text.hpp"
#include "arena/marketdata/fixtures.hpp"

namespace arena::marketdata {

FixturePriceConnector::FixturePriceConnector(std::string name, std::vector<RawPriceRecord> records)
    : name_(std::move(name)), records_(std::move(records)) {}

std::unique_ptr<FixturePriceConnector> FixturePriceConnector::from_file(const std::string& path) {
    return std::make_unique<FixturePriceConnector>("fixture:" + path, parse_price_csv(text::read_file(path)));
}

std::vector<RawPriceRecord> FixturePriceConnector::fetch_prices(const AssetId& asset, Date from, Date to) {
    std::vector<RawPriceRecord> out;
    for (const auto& r : records_) {
        if (text::to_upper(text::trim(r.symbol)) != asset.symbol) continue;
        const Date d = Date::parse(text::trim(r.date));
        if (d >= from && d <= to) out.push_back(r);
    }
    return out;
}

FixtureNewsConnector::FixtureNewsConnector(std::string name, std::vector<NewsItem> items)
    : name_(std::move(name)), items_(std::move(items)) {}

std::unique_ptr<FixtureNewsConnector> FixtureNewsConnector::from_file(const std::string& path,
                                                                     const AssetUniverse& universe) {
    return std::make_unique<FixtureNewsConnector>("fixture:" + path,
                                                  parse_news_lines(text::read_file(path), universe));
}

std::vector<NewsItem> FixtureNewsConnector::fetch_news(const AssetId& asset, Date from, Date to) {
    std::vector<NewsItem> out;
    for (const auto& n : items_) {
        const Date d = date_of(n.published);
        if (n.asset.symbol == asset.symbol && d >= from && d <= to) out.push_back(n);
    }
    return out;
}

namespace {

template <typename Record, typename Connector, typename Fetch>
Collected<Record> collect(std::span<Connector* const> sources, Fetch fetch) {
    std::vector<std::future<std::vector<Record>>> tasks;
    tasks.reserve(sources.size());
    for (Connector* c : sources) tasks.push_back(std::async(std::launch::async, [c, &fetch] { return fetch(*c); }));

    Collected<Record> out;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        try {
            auto part = tasks[i].get();
            out.records.insert(out.records.end(), std::make_move_iterator(part.begin()),
                               std::make_move_iterator(part.end()));
        } catch (const std::exception& e) {
            out.failures.push_back(SourceFailure{sources[i]->name(), e.what()});
        }
    }
    return out;
}

} // namespace

Collected<RawPriceRecord> collect_prices(std::span<PriceConnector* const> sources, const AssetId& asset, Date from,
                                         Date to) {
    return collect<RawPriceRecord>(sources, [&](PriceConnector& c) { return c.fetch_prices(asset, from, to); });
}

Collected<NewsItem> collect_news(std::span<NewsConnector* const> sources, const AssetId& asset, Date from,
                                 Date to) {
    return collect<NewsItem>(sources, [&](NewsConnector& c) { return c.fetch_news(asset, from, to); });
}

} // namespace arena::marketdata

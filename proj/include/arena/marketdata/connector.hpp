#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "arena/core/date.hpp"
#include "arena/marketdata/news.hpp"
#include "arena/marketdata/price.hpp"

namespace arena::marketdata {

// Uniform acquisition contract: every source answers fetch(asset, range).
class PriceConnector {
public:
    virtual ~PriceConnector() = default;
    virtual std::string name() const = 0;
    /// Records dated in [from, to]. Throws on source outage.
    virtual std::vector<RawPriceRecord> fetch_prices(const AssetId& asset, Date from, Date to) = 0;
};

class NewsConnector {
public:
    virtual ~NewsConnector() = default;
    virtual std::string name() const = 0;
    /// Items published on a UTC day in [from, to]. Throws on source outage.
    virtual std::vector<NewsItem> fetch_news(const AssetId& asset, Date from, Date to) = 0;
};

/// Replay connector over a price CSV fixture held in memory.
class FixturePriceConnector final : public PriceConnector {
public:
    FixturePriceConnector(std::string name, std::vector<RawPriceRecord> records);
    static std::unique_ptr<FixturePriceConnector> from_file(const std::string& path);

    std::string name() const override { return name_; }
    std::vector<RawPriceRecord> fetch_prices(const AssetId& asset, Date from, Date to) override;

private:
    std::string name_;
    std::vector<RawPriceRecord> records_;
};

class FixtureNewsConnector final : public NewsConnector {
public:
    FixtureNewsConnector(std::string name, std::vector<NewsItem> items);
    static std::unique_ptr<FixtureNewsConnector> from_file(const std::string& path, const AssetUniverse& universe);

    std::string name() const override { return name_; }
    std::vector<NewsItem> fetch_news(const AssetId& asset, Date from, Date to) override;

private:
    std::string name_;
    std::vector<NewsItem> items_;
};

struct SourceFailure {
    std::string source;
    std::string message;
};

template <typename Record>
struct Collected {
    std::vector<Record> records;  // concatenated in connector order
    std::vector<SourceFailure> failures;
};

/// Fetches from every connector concurrently (one task per source).
Collected<RawPriceRecord> collect_prices(std::span<PriceConnector* const> sources, const AssetId& asset, Date from,
                                         Date to);
Collected<NewsItem> collect_news(std::span<NewsConnector* const> sources, const AssetId& asset, Date from, Date to);

} // namespace arena::marketdata

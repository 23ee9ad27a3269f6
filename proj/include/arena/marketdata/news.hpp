#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arena/core/date.hpp"
#include "arena/marketdata/asset.hpp"

namespace arena::marketdata {

struct NewsItem {
    std::string id;
    AssetId asset;
    Timestamp published;
    std::string title;
    std::string body;
    std::string source;
    std::string url;

    friend bool operator==(const NewsItem&, const NewsItem&) = default;
};

/// Content hash over (url, title, body): hex SHA-256 truncated to 32 chars.
/// Syndicated copies with a different url get different ids.
std::string news_id(std::string_view url, std::string_view title, std::string_view body);

/// Builds an item with its id computed from content.
NewsItem make_news_item(AssetId asset, Timestamp published, std::string title, std::string body,
                        std::string source, std::string url);

/// Unique by id, first occurrence wins, output ordered by (published, id).
std::vector<NewsItem> dedupe_news(std::span<const NewsItem> items);

/// Drops items published after `ingested_at`.
std::vector<NewsItem> reject_future_items(std::span<const NewsItem> items, Timestamp ingested_at);

} // namespace arena::marketdata

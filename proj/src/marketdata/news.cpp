#include "arena/marketdata/news.hpp"

#include <algorithm>
#include <unordered_set>

#include "arena/core/hash.hpp"

namespace arena::marketdata {

std::string news_id(std::string_view url, std::string_view title, std::string_view body) {
    // length prefixes keep ("ab","c") and ("a","bc") apart
    std::string material;
    for (std::string_view field : {url, title, body}) {
        material += std::to_string(field.size());
        material += ':';
        material += field;
    }
    return sha256_hex(material).substr(0, 32);
}

NewsItem make_news_item(AssetId asset, Timestamp published, std::string title, std::string body,
                        std::string source, std::string url) {
    NewsItem item{news_id(url, title, body), std::move(asset), published, std::move(title), std::move(body),
                  std::move(source), std::move(url)};
    return item;
}

std::vector<NewsItem> dedupe_news(std::span<const NewsItem> items) {
    std::vector<NewsItem> out;
    std::unordered_set<std::string> seen;
    for (const auto& item : items) {
        if (seen.insert(item.id).second) out.push_back(item);
    }
    std::stable_sort(out.begin(), out.end(), [](const NewsItem& a, const NewsItem& b) {
        if (a.published != b.published) return a.published < b.published;
        return a.id < b.id;
    });
    return out;
}

std::vector<NewsItem> reject_future_items(std::span<const NewsItem> items, Timestamp ingested_at) {
    std::vector<NewsItem> out;
    std::copy_if(items.begin(), items.end(), std::back_inserter(out),
                 [&](const NewsItem& n) { return n.published <= ingested_at; });
    return out;
}

} // namespace arena::marketdata

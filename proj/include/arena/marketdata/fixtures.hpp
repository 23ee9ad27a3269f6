#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "arena/marketdata/news.hpp"
#include "arena/marketdata/price.hpp"

namespace arena::marketdata {

// Price fixture: CSV with header `symbol,date,close,source`.
std::vector<RawPriceRecord> parse_price_csv(std::string_view csv);
std::string write_price_csv(std::span<const PriceBar> bars);

// News fixture: one JSON object per line with fields
// id,symbol,published,title,body,source,url. An empty or missing id is
// computed; a present id must match the content hash.
std::vector<NewsItem> parse_news_lines(std::string_view lines, const AssetUniverse& universe);
std::string write_news_lines(std::span<const NewsItem> items);

} // namespace arena::marketdata

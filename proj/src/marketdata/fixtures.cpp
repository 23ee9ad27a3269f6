#include "arena/marketdata/fixtures.hpp"

#include <nlohmann/json.hpp>

#include "arena/core/errors.hpp"
#include "arena/core/text.hpp"

namespace arena::marketdata {

using nlohmann::json;

std::vector<RawPriceRecord> parse_price_csv(std::string_view csv) {
    const auto lines = text::split_lines(csv);
    if (lines.empty() || text::trim(lines.front()) != "symbol,date,close,source")
        throw ParseError("price CSV must start with header 'symbol,date,close,source'");
    std::vector<RawPriceRecord> out;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (text::trim(lines[i]).empty()) continue;
        const auto f = text::parse_csv_row(lines[i]);
        if (f.size() != 4) throw ParseError("price CSV line " + std::to_string(i + 1) + ": expected 4 fields");
        double close = 0.0;
        try {
            close = text::parse_double(f[2]);
        } catch (const ParseError&) {
            throw ParseError("price CSV line " + std::to_string(i + 1) + ": bad close '" + f[2] + "'");
        }
        out.push_back(RawPriceRecord{std::string(text::trim(f[0])), std::string(text::trim(f[1])), close,
                                     std::string(text::trim(f[3]))});
    }
    return out;
}

std::string write_price_csv(std::span<const PriceBar> bars) {
    std::string out = "symbol,date,close,source\n";
    for (const auto& b : bars) {
        out += text::csv_escape(b.asset.symbol) + ',' + b.date.to_string() + ',' + text::format_double(b.close) +
               ',' + text::csv_escape(b.source) + '\n';
    }
    return out;
}

std::vector<NewsItem> parse_news_lines(std::string_view lines, const AssetUniverse& universe) {
    std::vector<NewsItem> out;
    std::size_t lineno = 0;
    for (const auto& line : text::split_lines(lines)) {
        ++lineno;
        if (text::trim(line).empty()) continue;
        json j;
        try {
            j = json::parse(line);
        } catch (const json::parse_error& e) {
            throw ParseError("news line " + std::to_string(lineno) + ": " + e.what());
        }
        try {
            NewsItem item = make_news_item(universe.resolve(j.at("symbol").get<std::string>()),
                                           parse_timestamp(j.at("published").get<std::string>()),
                                           j.at("title").get<std::string>(), j.at("body").get<std::string>(),
                                           j.value("source", std::string{}), j.value("url", std::string{}));
            const auto given = j.value("id", std::string{});
            if (!given.empty() && given != item.id)
                throw ValidationError("id '" + given + "' does not match content hash '" + item.id + "'");
            out.push_back(std::move(item));
        } catch (const json::exception& e) {
            throw ParseError("news line " + std::to_string(lineno) + ": " + e.what());
        } catch (const Error& e) {
            throw ParseError("news line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

std::string write_news_lines(std::span<const NewsItem> items) {
    std::string out;
    for (const auto& n : items) {
        json j = {{"id", n.id},       {"symbol", n.asset.symbol}, {"published", format_timestamp(n.published)},
                  {"title", n.title}, {"body", n.body},           {"source", n.source},
                  {"url", n.url}};
        out += j.dump() + '\n';
    }
    return out;
}

} // namespace arena::marketdata

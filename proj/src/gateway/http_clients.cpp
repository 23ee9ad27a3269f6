#include "arena/gateway/http_clients.hpp"

#include <cstdlib>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "arena/core/errors.hpp"
#include "arena/core/text.hpp"
#include "arena/marketdata/fixtures.hpp"

namespace arena::gateway {

using nlohmann::json;

UrlParts split_url(const std::string& url) {
    const auto scheme_end = url.find("://");
    if (scheme_end == std::string::npos) throw ConfigError("not a URL: '" + url + "'");
    const std::string scheme = url.substr(0, scheme_end);
    if (scheme != "http" && scheme != "https") throw ConfigError("unsupported URL scheme '" + scheme + "'");
    const auto path_start = url.find('/', scheme_end + 3);
    UrlParts parts;
    parts.origin = url.substr(0, path_start);
    if (path_start != std::string::npos) parts.path = url.substr(path_start);
    while (!parts.path.empty() && parts.path.back() == '/') parts.path.pop_back();
    if (parts.origin.size() == scheme_end + 3) throw ConfigError("URL has no host: '" + url + "'");
    return parts;
}

HttpChatProvider::HttpChatProvider(protocol::ProviderConfig cfg, std::string model)
    : cfg_(std::move(cfg)), model_(std::move(model)), url_(split_url(cfg_.endpoint)) {}

std::string HttpChatProvider::complete(const llm::CompletionRequest& request) {
    httplib::Headers headers;
    if (!cfg_.api_key_env.empty()) {
        const char* key = std::getenv(cfg_.api_key_env.c_str());
        if (key == nullptr || *key == '\0')
            throw ProviderError("credential variable " + cfg_.api_key_env + " is not set");
        headers.emplace("Authorization", std::string("Bearer ") + key);
    }
    const json body{{"model", model_},
                    {"temperature", request.temperature},
                    {"messages", json::array({json{{"role", "system"}, {"content", request.system}},
                                              json{{"role", "user"}, {"content", request.user}}})}};

    httplib::Client client(url_.origin);
    client.set_connection_timeout(cfg_.timeout_seconds);
    client.set_read_timeout(cfg_.timeout_seconds);
    const auto res = client.Post(url_.path + "/chat/completions", headers, body.dump(), "application/json");
    if (!res) throw ProviderError("chat endpoint unreachable: " + httplib::to_string(res.error()));
    if (res->status != 200) throw ProviderError("chat endpoint returned HTTP " + std::to_string(res->status));
    try {
        const auto reply = json::parse(res->body);
        return reply.at("choices").at(0).at("message").at("content").get<std::string>();
    } catch (const json::exception& e) {
        throw ProviderError(std::string("malformed chat response: ") + e.what());
    }
}

HttpFeedConnector::HttpFeedConnector(std::string base_url, marketdata::AssetUniverse universe, int timeout_seconds)
    : url_(split_url(base_url)), universe_(std::move(universe)), timeout_seconds_(timeout_seconds) {}

std::string HttpFeedConnector::get(const std::string& what, const marketdata::AssetId& asset, Date from,
                                   Date to) const {
    httplib::Client client(url_.origin);
    client.set_connection_timeout(timeout_seconds_);
    client.set_read_timeout(timeout_seconds_);
    const httplib::Params params{{"symbol", asset.symbol}, {"from", from.to_string()}, {"to", to.to_string()}};
    const auto res = client.Get(url_.path + "/" + what, params, httplib::Headers{});
    if (!res) throw ProviderError("feed unreachable: " + httplib::to_string(res.error()));
    if (res->status != 200) throw ProviderError("feed returned HTTP " + std::to_string(res->status) + " for " + what);
    return res->body;
}

std::vector<marketdata::RawPriceRecord> HttpFeedConnector::fetch_prices(const marketdata::AssetId& asset, Date from,
                                                                        Date to) {
    std::vector<marketdata::RawPriceRecord> out;
    for (auto& r : marketdata::parse_price_csv(get("prices", asset, from, to))) {
        if (text::to_upper(text::trim(r.symbol)) != asset.symbol) continue;
        const Date d = Date::parse(r.date);
        if (d < from || d > to) continue;
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<marketdata::NewsItem> HttpFeedConnector::fetch_news(const marketdata::AssetId& asset, Date from, Date to) {
    std::vector<marketdata::NewsItem> out;
    for (auto& n : marketdata::parse_news_lines(get("news", asset, from, to), universe_)) {
        const Date d = date_of(n.published);
        if (n.asset.symbol != asset.symbol || d < from || d > to) continue;
        out.push_back(std::move(n));
    }
    return out;
}

} // namespace arena::gateway

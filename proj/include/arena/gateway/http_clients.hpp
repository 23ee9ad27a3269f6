#pragma once

#include <string>

#include "arena/llm/provider.hpp"
#include "arena/marketdata/connector.hpp"
#include "arena/protocol/config.hpp"

namespace arena::gateway {

/// scheme://host[:port] and the path prefix of a base URL.
struct UrlParts {
    std::string origin;
    std::string path;  // no trailing slash; empty for the root
};

/// Throws ConfigError on anything other than an http(s) URL.
UrlParts split_url(const std::string& url);

/// OpenAI-compatible chat-completions client. The credential is read from
/// the environment variable named in the config and never logged.
class HttpChatProvider final : public llm::TextProvider {
public:
    HttpChatProvider(protocol::ProviderConfig cfg, std::string model);
    std::string complete(const llm::CompletionRequest& request) override;

private:
    protocol::ProviderConfig cfg_;
    std::string model_;
    UrlParts url_;
};

/// Generic HTTP market feed:
///   GET <base>/prices?symbol=S&from=D&to=D -> price CSV
///   GET <base>/news?symbol=S&from=D&to=D   -> news JSON lines
class HttpFeedConnector final : public marketdata::PriceConnector, public marketdata::NewsConnector {
public:
    HttpFeedConnector(std::string base_url, marketdata::AssetUniverse universe, int timeout_seconds = 30);

    std::string name() const override { return "http-feed"; }
    std::vector<marketdata::RawPriceRecord> fetch_prices(const marketdata::AssetId& asset, Date from,
                                                         Date to) override;
    std::vector<marketdata::NewsItem> fetch_news(const marketdata::AssetId& asset, Date from, Date to) override;

private:
    std::string get(const std::string& what, const marketdata::AssetId& asset, Date from, Date to) const;

    UrlParts url_;
    marketdata::AssetUniverse universe_;
    int timeout_seconds_;
};

} // namespace arena::gateway

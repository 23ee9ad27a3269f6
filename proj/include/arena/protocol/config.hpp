#pragma once

#include <chrono>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "arena/core/date.hpp"
#include "arena/ledger/ledger.hpp"
#include "arena/marketdata/asset.hpp"
#include "arena/protocol/agent_spec.hpp"

namespace arena::protocol {

/// Generation and memory settings shared by every agent in a run.
struct ProtocolConfig {
    double temperature = 0.5;
    int retry_limit = 3;
    int warmup_days = 90;
    int memory_size = 7;  // past actions and price bars shown to an agent
    std::chrono::seconds decision_time{20 * 3600};  // UTC time of day

    void validate() const;
};

/// Provider wiring. `kind` is one of:
///   recorded - replies from the reply store only
///   http     - OpenAI-compatible chat endpoint; replies are also recorded
///              when `record` is true
struct ProviderConfig {
    std::string kind = "recorded";
    std::string endpoint;
    std::string api_key_env;  // name of the variable holding the credential
    std::string model;        // summarizer model; agents use their backbone
    bool record = true;
    int timeout_seconds = 60;
};

struct DataConfig {
    std::vector<std::string> price_files;
    std::vector<std::string> news_files;
    std::string briefs_dir;   // existing brief store, optional
    std::string replies_dir;  // reply store for record/replay
    std::vector<std::string> price_sources;  // priority, highest first
    std::string feed_url;     // HTTP feed for live mode, optional
};

struct RunConfig {
    std::string run_id = "run";
    std::vector<marketdata::AssetId> assets;
    Date warmup_start{2025, 5, 1};
    Date live_start{2025, 8, 1};
    Date end{2025, 9, 30};
    std::set<Date> holidays;
    ProtocolConfig protocol;
    ledger::FeeModel fees;
    std::map<marketdata::AssetClass, double> periods_per_year = {{marketdata::AssetClass::Equity, 252.0},
                                                                 {marketdata::AssetClass::Crypto, 365.0}};
    double risk_free = 0.0;
    std::vector<AgentSpec> agents;
    DataConfig data;
    ProviderConfig provider;
    std::optional<ProviderConfig> summarizer;  // when set, briefs are summarized from news

    /// Directory relative paths in `data` are resolved against.
    std::string base_dir = ".";

    double ppy(marketdata::AssetClass c) const;
    std::string resolve(const std::string& path) const;
    marketdata::AssetUniverse universe() const;
    const AgentSpec& agent(const std::string& name) const;

    /// Checks ranges, agent name uniqueness and ensemble member references.
    void validate() const;

    /// Missing `warmup_start` defaults to live_start - warmup_days.
    static RunConfig from_json(const nlohmann::json& j, std::string base_dir = ".");
    static RunConfig load(const std::string& path);
    nlohmann::json to_json() const;
};

} // namespace arena::protocol

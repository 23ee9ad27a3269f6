#include "arena/protocol/config.hpp"

#include <filesystem>

#include "arena/core/errors.hpp"
#include "arena/core/text.hpp"

namespace arena::protocol {

using nlohmann::json;
namespace fs = std::filesystem;

void ProtocolConfig::validate() const {
    if (retry_limit < 0) throw ConfigError("retry_limit must be >= 0");
    if (memory_size < 1) throw ConfigError("memory_size must be >= 1");
    if (warmup_days < 0) throw ConfigError("warmup_days must be >= 0");
    if (!(temperature >= 0.0)) throw ConfigError("temperature must be >= 0");
    if (decision_time < std::chrono::seconds{0} || decision_time >= std::chrono::hours{24})
        throw ConfigError("decision_time must be within one day");
}

double RunConfig::ppy(marketdata::AssetClass c) const {
    const auto it = periods_per_year.find(c);
    if (it == periods_per_year.end())
        throw ConfigError("no periods_per_year for " + std::string(marketdata::to_string(c)));
    return it->second;
}

std::string RunConfig::resolve(const std::string& path) const {
    if (path.empty() || fs::path(path).is_absolute()) return path;
    return (fs::path(base_dir) / path).lexically_normal().string();
}

marketdata::AssetUniverse RunConfig::universe() const {
    marketdata::AssetUniverse u;
    for (const auto& a : assets) u.add(a);
    return u;
}

const AgentSpec& RunConfig::agent(const std::string& name) const {
    for (const auto& a : agents)
        if (a.name == name) return a;
    throw ConfigError("unknown agent '" + name + "'");
}

void RunConfig::validate() const {
    protocol.validate();
    if (run_id.empty() || run_id.find_first_of("/\\") != std::string::npos)
        throw ConfigError("run_id must be a non-empty plain name");
    if (assets.empty()) throw ConfigError("run has no assets");
    if (warmup_start > live_start) throw ConfigError("warmup_start is after live_start");
    if (live_start > end) throw ConfigError("live_start is after end");
    if (fees.fee_bps < 0.0) throw ConfigError("fee_bps must be >= 0");
    for (const auto& [cls, v] : periods_per_year)
        if (!(v > 0.0)) throw ConfigError("periods_per_year must be positive");
    for (const auto& a : assets) (void)ppy(a.asset_class);
    if (agents.empty()) throw ConfigError("run has no agents");
    std::set<std::string> names;
    std::set<std::tuple<std::string, std::string, std::string>> display;
    for (const auto& a : agents) {
        a.validate();
        if (!names.insert(a.name).second) throw ConfigError("duplicate agent name '" + a.name + "'");
        const auto ref = a.ref();
        if (!display.emplace(ref.label, ref.backbone, ref.strategy).second)
            throw ConfigError("agents share label/backbone/strategy: '" + a.name + "'");
    }
    for (const auto& a : agents) {
        for (const auto& m : a.members) {
            if (!names.count(m)) throw ConfigError("ensemble '" + a.name + "' names unknown member '" + m + "'");
            if (agent(m).framework == Framework::VoteEnsemble)
                throw ConfigError("ensemble '" + a.name + "' cannot contain another ensemble");
        }
    }
}

namespace {

std::chrono::seconds parse_time_of_day(const std::string& s) {
    const auto parts = text::split(s, ':');
    if (parts.size() < 2 || parts.size() > 3) throw ConfigError("decision_time must be HH:MM[:SS], got '" + s + "'");
    const int h = std::stoi(parts[0]);
    const int m = std::stoi(parts[1]);
    const int sec = parts.size() == 3 ? std::stoi(parts[2]) : 0;
    return std::chrono::hours{h} + std::chrono::minutes{m} + std::chrono::seconds{sec};
}

std::string format_time_of_day(std::chrono::seconds t) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%02d:%02d:%02d", static_cast<int>(t.count() / 3600),
                  static_cast<int>(t.count() / 60 % 60), static_cast<int>(t.count() % 60));
    return buf;
}

ProviderConfig provider_from_json(const json& j) {
    ProviderConfig p;
    p.kind = j.value("kind", p.kind);
    p.endpoint = j.value("endpoint", p.endpoint);
    p.api_key_env = j.value("api_key_env", p.api_key_env);
    p.model = j.value("model", p.model);
    p.record = j.value("record", p.record);
    p.timeout_seconds = j.value("timeout_seconds", p.timeout_seconds);
    if (p.kind != "recorded" && p.kind != "http") throw ConfigError("unknown provider kind '" + p.kind + "'");
    return p;
}

json provider_to_json(const ProviderConfig& p) {
    return json{{"kind", p.kind},
                {"endpoint", p.endpoint},
                {"api_key_env", p.api_key_env},
                {"model", p.model},
                {"record", p.record},
                {"timeout_seconds", p.timeout_seconds}};
}

std::vector<std::string> string_or_list(const json& j, const char* key) {
    if (!j.contains(key)) return {};
    const auto& v = j.at(key);
    if (v.is_string()) return {v.get<std::string>()};
    return v.get<std::vector<std::string>>();
}

} // namespace

RunConfig RunConfig::from_json(const json& j, std::string base_dir) {
    RunConfig c;
    c.base_dir = std::move(base_dir);
    try {
        c.run_id = j.value("run_id", c.run_id);
        for (const auto& a : j.at("assets"))
            c.assets.push_back(marketdata::AssetId::make(
                a.at("symbol").get<std::string>(),
                marketdata::asset_class_from_string(a.at("class").get<std::string>())));
        if (j.contains("protocol")) {
            const auto& p = j.at("protocol");
            c.protocol.temperature = p.value("temperature", c.protocol.temperature);
            c.protocol.retry_limit = p.value("retry_limit", c.protocol.retry_limit);
            c.protocol.warmup_days = p.value("warmup_days", c.protocol.warmup_days);
            c.protocol.memory_size = p.value("memory_size", c.protocol.memory_size);
            if (p.contains("decision_time"))
                c.protocol.decision_time = parse_time_of_day(p.at("decision_time").get<std::string>());
        }
        if (j.contains("live_start")) c.live_start = Date::parse(j.at("live_start").get<std::string>());
        if (j.contains("end")) c.end = Date::parse(j.at("end").get<std::string>());
        if (j.contains("warmup_start"))
            c.warmup_start = Date::parse(j.at("warmup_start").get<std::string>());
        else if (j.contains("live_start"))
            c.warmup_start = c.live_start - c.protocol.warmup_days;
        for (const auto& h : j.value("holidays", std::vector<std::string>{})) c.holidays.insert(Date::parse(h));
        c.fees.fee_bps = j.value("fee_bps", 0.0);
        if (j.contains("periods_per_year"))
            for (const auto& [k, v] : j.at("periods_per_year").items())
                c.periods_per_year[marketdata::asset_class_from_string(k)] = v.get<double>();
        c.risk_free = j.value("risk_free", 0.0);
        for (const auto& a : j.at("agents")) c.agents.push_back(agent_spec_from_json(a));
        if (j.contains("data")) {
            const auto& d = j.at("data");
            c.data.price_files = string_or_list(d, "prices");
            c.data.news_files = string_or_list(d, "news");
            c.data.briefs_dir = d.value("briefs", std::string{});
            c.data.replies_dir = d.value("replies", std::string{});
            c.data.price_sources = d.value("price_sources", std::vector<std::string>{});
            c.data.feed_url = d.value("feed_url", std::string{});
        }
        if (j.contains("provider")) c.provider = provider_from_json(j.at("provider"));
        if (j.contains("summarizer")) c.summarizer = provider_from_json(j.at("summarizer"));
    } catch (const json::exception& e) {
        throw ConfigError(std::string("bad run configuration: ") + e.what());
    } catch (const ParseError& e) {
        throw ConfigError(std::string("bad run configuration: ") + e.what());
    }
    c.validate();
    return c;
}

RunConfig RunConfig::load(const std::string& path) {
    json j;
    try {
        j = json::parse(text::read_file(path));
    } catch (const json::parse_error& e) {
        throw ConfigError("config " + path + ": " + e.what());
    }
    auto dir = fs::path(path).parent_path().string();
    return from_json(j, dir.empty() ? "." : dir);
}

json RunConfig::to_json() const {
    json assets_j = json::array();
    for (const auto& a : assets)
        assets_j.push_back(json{{"symbol", a.symbol}, {"class", std::string(marketdata::to_string(a.asset_class))}});
    json hol = json::array();
    for (auto d : holidays) hol.push_back(d.to_string());
    json ppy_j = json::object();
    for (const auto& [cls, v] : periods_per_year) ppy_j[std::string(marketdata::to_string(cls))] = v;
    // paths are written absolute so the copy stored next to a run log stays usable
    auto abs = [this](const std::string& p) {
        return p.empty() ? p : fs::absolute(resolve(p)).lexically_normal().string();
    };
    json agents_j = json::array();
    for (auto a : agents) {
        if (auto it = a.params.find("script"); it != a.params.end()) it->second = abs(it->second);
        agents_j.push_back(agent_spec_to_json(a));
    }
    std::vector<std::string> prices, news;
    for (const auto& p : data.price_files) prices.push_back(abs(p));
    for (const auto& p : data.news_files) news.push_back(abs(p));
    json j{{"run_id", run_id},
           {"assets", assets_j},
           {"warmup_start", warmup_start.to_string()},
           {"live_start", live_start.to_string()},
           {"end", end.to_string()},
           {"holidays", hol},
           {"protocol",
            {{"temperature", protocol.temperature},
             {"retry_limit", protocol.retry_limit},
             {"warmup_days", protocol.warmup_days},
             {"memory_size", protocol.memory_size},
             {"decision_time", format_time_of_day(protocol.decision_time)}}},
           {"fee_bps", fees.fee_bps},
           {"periods_per_year", ppy_j},
           {"risk_free", risk_free},
           {"agents", agents_j},
           {"data",
            {{"prices", prices},
             {"news", news},
             {"briefs", abs(data.briefs_dir)},
             {"replies", abs(data.replies_dir)},
             {"price_sources", data.price_sources},
             {"feed_url", data.feed_url}}},
           {"provider", provider_to_json(provider)}};
    if (summarizer) j["summarizer"] = provider_to_json(*summarizer);
    return j;
}

} // namespace arena::protocol

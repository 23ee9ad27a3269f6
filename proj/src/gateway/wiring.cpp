#include "arena/gateway/wiring.hpp"

#include <filesystem>

#include "arena/core/errors.hpp"
#include "arena/core/text.hpp"
#include "arena/gateway/http_clients.hpp"

namespace arena::gateway {

namespace fs = std::filesystem;

RunResources::RunResources(const protocol::RunConfig& cfg) : cfg_(cfg) {
    const std::string replies = cfg_.data.replies_dir.empty() ? "" : cfg_.resolve(cfg_.data.replies_dir);
    for (const auto& a : cfg_.agents) {
        if (a.framework != protocol::Framework::GenericLLM) continue;
        const std::string& model = *a.backbone;
        if (!by_backbone_.contains(model)) by_backbone_[model] = &make(cfg_.provider, model, replies);
    }

    if (cfg_.summarizer) {
        auto& provider = make(*cfg_.summarizer, cfg_.summarizer->model, replies);
        std::optional<briefing::BriefStore> out;
        if (!cfg_.data.briefs_dir.empty()) out.emplace(cfg_.resolve(cfg_.data.briefs_dir));
        auto src = std::make_unique<protocol::SummarizingBriefSource>(
            provider, briefing::SummarizerOptions{cfg_.protocol.temperature, cfg_.protocol.retry_limit}, std::move(out));
        const auto news = protocol::load_news(cfg_);
        src->add_news(news);
        summarizing_ = src.get();
        briefs_ = std::move(src);
    } else if (!cfg_.data.briefs_dir.empty()) {
        briefs_ = std::make_unique<protocol::StoredBriefSource>(briefing::BriefStore(cfg_.resolve(cfg_.data.briefs_dir)));
    } else {
        briefs_ = std::make_unique<protocol::NoBriefs>();
    }
}

RunResources::~RunResources() = default;

llm::TextProvider& RunResources::make(const protocol::ProviderConfig& p, const std::string& model,
                                      const std::string& replies) {
    if (p.kind == "recorded") {
        if (recorded_ == nullptr) {
            if (replies.empty()) throw ConfigError("recorded provider needs data.replies");
            owned_.push_back(std::make_unique<llm::RecordedReplyProvider>(replies));
            recorded_ = owned_.back().get();
        }
        return *recorded_;
    }
    owned_.push_back(std::make_unique<HttpChatProvider>(p, model));
    llm::TextProvider* provider = owned_.back().get();
    if (p.record && !replies.empty()) {
        owned_.push_back(std::make_unique<llm::RecordingProvider>(*provider, replies));
        provider = owned_.back().get();
    }
    return *provider;
}

protocol::ProviderFor RunResources::provider_for() {
    return [this](const protocol::AgentSpec& spec) -> llm::TextProvider& {
        const auto it = by_backbone_.find(spec.backbone.value_or(""));
        if (it == by_backbone_.end()) throw ConfigError("no provider for agent '" + spec.name + "'");
        return *it->second;
    };
}

std::string run_dir_for(const std::string& root, const std::string& run_id) {
    return (fs::path(root) / "runs" / run_id).string();
}

persistence::ArenaState run_recorded(const protocol::RunConfig& cfg, const std::string& run_dir,
                                     const persistence::EventLog::Options& log_options) {
    fs::create_directories(run_dir);
    const auto log_path = fs::path(run_dir) / "events.log";
    if (fs::exists(log_path) && fs::file_size(log_path) > 0)
        throw ValidationError("run directory already holds a log: " + log_path.string());

    RunResources resources(cfg);
    auto market = protocol::load_market(cfg);
    ManualClock clock;
    persistence::EventLog log(log_path.string(), log_options);
    protocol::Session session(cfg, market, resources.briefs(), resources.provider_for(), clock, log);
    session.run();
    text::write_file((fs::path(run_dir) / "config.json").string(), cfg.to_json().dump(2) + "\n");
    return session.state();
}

persistence::ArenaState replay_run_dir(const std::string& run_dir) {
    const auto scan = persistence::read_log_file((fs::path(run_dir) / "events.log").string());
    return persistence::ArenaState::replay(scan.events);
}

} // namespace arena::gateway

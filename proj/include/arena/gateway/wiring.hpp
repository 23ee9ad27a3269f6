#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "arena/core/clock.hpp"
#include "arena/persistence/event_log.hpp"
#include "arena/protocol/session.hpp"

namespace arena::gateway {

/// Providers and brief source a run needs, built from its config.
///
/// `recorded` serves every agent and the summarizer from the reply store.
/// `http` gives each backbone its own chat client, wrapped in a recorder
/// when recording is enabled.
class RunResources {
public:
    explicit RunResources(const protocol::RunConfig& cfg);
    ~RunResources();

    protocol::ProviderFor provider_for();
    protocol::BriefSource& briefs() { return *briefs_; }
    /// Non-null when briefs are summarized from news.
    protocol::SummarizingBriefSource* summarizer() { return summarizing_; }

private:
    llm::TextProvider& make(const protocol::ProviderConfig& p, const std::string& model, const std::string& replies);

    std::vector<std::unique_ptr<llm::TextProvider>> owned_;
    std::map<std::string, llm::TextProvider*> by_backbone_;
    llm::TextProvider* recorded_ = nullptr;
    protocol::RunConfig cfg_;
    std::unique_ptr<protocol::BriefSource> briefs_;
    protocol::SummarizingBriefSource* summarizing_ = nullptr;
};

/// `<root>/runs/<run_id>`.
std::string run_dir_for(const std::string& root, const std::string& run_id);

/// Runs a whole configured session against recorded inputs, writing
/// `events.log` and `config.json` into `run_dir`. Returns the final state.
persistence::ArenaState run_recorded(const protocol::RunConfig& cfg, const std::string& run_dir,
                                     const persistence::EventLog::Options& log_options = {});

/// Loads `<run_dir>/events.log` and folds it. Throws Error naming the path
/// when the log is missing, IntegrityError on corruption.
persistence::ArenaState replay_run_dir(const std::string& run_dir);

} // namespace arena::gateway

#include "arena/gateway/registry.hpp"

#include "arena/core/errors.hpp"
#include "arena/core/hash.hpp"

namespace arena::gateway {

std::string_view to_string(RunMode m) { return m == RunMode::Replay ? "Replay" : "Live"; }

std::string_view to_string(RunStatus s) {
    switch (s) {
    case RunStatus::WarmingUp: return "WarmingUp";
    case RunStatus::Running: return "Running";
    case RunStatus::Stopped: return "Stopped";
    case RunStatus::Failed: return "Failed";
    }
    return "?";
}

bool can_transition(RunStatus from, RunStatus to) {
    switch (from) {
    case RunStatus::WarmingUp: return to != RunStatus::WarmingUp;
    case RunStatus::Running: return to == RunStatus::Stopped || to == RunStatus::Failed;
    case RunStatus::Stopped:
    case RunStatus::Failed: return false;
    }
    return false;
}

RunHandle::RunHandle(std::string run_id, RunMode mode, Timestamp started)
    : run_id_(std::move(run_id)), mode_(mode), started_(started) {}

void RunHandle::transition(RunStatus to) {
    std::lock_guard lock(transition_mutex_);
    const RunStatus from = status_.load();
    if (!can_transition(from, to))
        throw ValidationError("run " + run_id_ + ": illegal status change " + std::string(to_string(from)) + " -> " +
                              std::string(to_string(to)));
    status_.store(to);
}

void RunHandle::fail(std::string reason) {
    {
        std::lock_guard lock(transition_mutex_);
        failure_ = std::move(reason);
    }
    if (can_transition(status(), RunStatus::Failed)) transition(RunStatus::Failed);
}

std::string RunHandle::failure() const {
    std::lock_guard lock(transition_mutex_);
    return failure_;
}

void RunHandle::publish(std::shared_ptr<const persistence::ArenaState> state) {
    std::atomic_store(&state_, std::move(state));
    version_.fetch_add(1);
}

std::shared_ptr<const persistence::ArenaState> RunHandle::state() const { return std::atomic_load(&state_); }

nlohmann::json RunHandle::to_json() const {
    const auto s = state();
    nlohmann::json j{{"run_id", run_id_},
                     {"mode", std::string(to_string(mode_))},
                     {"status", std::string(to_string(status()))},
                     {"started", format_timestamp(started_)},
                     {"events", s ? s->last_seq() : 0},
                     {"last_date", s && s->last_date() ? nlohmann::json(s->last_date()->to_string()) : nlohmann::json(nullptr)}};
    if (status() == RunStatus::Failed) j["failure"] = failure();
    return j;
}

void RunRegistry::add(std::shared_ptr<RunHandle> run) {
    std::lock_guard lock(mutex_);
    for (const auto& r : runs_)
        if (r->run_id() == run->run_id()) throw ValidationError("run '" + run->run_id() + "' already exists");
    runs_.push_back(std::move(run));
}

std::shared_ptr<RunHandle> RunRegistry::find(const std::string& run_id) const {
    std::lock_guard lock(mutex_);
    for (const auto& r : runs_)
        if (r->run_id() == run_id) return r;
    return nullptr;
}

std::vector<std::shared_ptr<RunHandle>> RunRegistry::runs() const {
    std::lock_guard lock(mutex_);
    return runs_;
}

std::string RunRegistry::data_version() const {
    std::string material;
    for (const auto& r : runs()) {
        const auto s = r->state();
        material += r->run_id() + ":" + std::to_string(s ? s->last_seq() : 0) + ";";
    }
    return sha256_hex(material).substr(0, 16);
}

} // namespace arena::gateway

#pragma once

#include <atomic>
#include <chrono>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "arena/core/date.hpp"
#include "arena/persistence/arena_state.hpp"

namespace arena::gateway {

enum class RunMode { Replay, Live };
enum class RunStatus { WarmingUp, Running, Stopped, Failed };

std::string_view to_string(RunMode m);
std::string_view to_string(RunStatus s);

/// Status only moves forward: WarmingUp -> Running -> Stopped | Failed.
/// A run that ends before going live may stop or fail from WarmingUp.
bool can_transition(RunStatus from, RunStatus to);

/// A run known to the service. The protocol thread publishes immutable
/// state snapshots; API readers take the current one without blocking it.
class RunHandle {
public:
    RunHandle(std::string run_id, RunMode mode, Timestamp started);

    const std::string& run_id() const { return run_id_; }
    RunMode mode() const { return mode_; }
    Timestamp started() const { return started_; }

    RunStatus status() const { return status_.load(); }
    /// Throws ValidationError on a backward or repeated transition.
    void transition(RunStatus to);
    void fail(std::string reason);
    std::string failure() const;

    void request_stop() { stop_requested_.store(true); }
    bool stop_requested() const { return stop_requested_.load(); }

    void publish(std::shared_ptr<const persistence::ArenaState> state);
    std::shared_ptr<const persistence::ArenaState> state() const;
    std::uint64_t version() const { return version_.load(); }

    nlohmann::json to_json() const;

private:
    std::string run_id_;
    RunMode mode_;
    Timestamp started_;
    std::atomic<RunStatus> status_{RunStatus::WarmingUp};
    std::atomic<bool> stop_requested_{false};
    std::atomic<std::uint64_t> version_{0};
    std::shared_ptr<const persistence::ArenaState> state_;
    mutable std::mutex transition_mutex_;
    std::string failure_;
};

class RunRegistry {
public:
    /// Throws ValidationError when the run id is already registered.
    void add(std::shared_ptr<RunHandle> run);
    std::shared_ptr<RunHandle> find(const std::string& run_id) const;
    std::vector<std::shared_ptr<RunHandle>> runs() const;

    /// Changes whenever any run publishes new state or a run is added.
    std::string data_version() const;

private:
    mutable std::mutex mutex_;
    std::vector<std::shared_ptr<RunHandle>> runs_;
};

} // namespace arena::gateway

#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "arena/analytics/leaderboard.hpp"
#include "arena/core/clock.hpp"
#include "arena/gateway/registry.hpp"

namespace httplib {
class Server;
}

namespace arena::gateway {

struct ApiRequest {
    std::string method;
    std::string path;
    std::vector<std::pair<std::string, std::string>> params;
    std::string body;
    std::string if_none_match;
};

struct ApiResponse {
    int status = 200;
    std::string body;
    std::string content_type = "application/json";
    std::string version;  // data-version token, also sent as the ETag
};

/// Builds a filter from query parameters. Only agents, assets, models and
/// strategies are accepted, as comma-separated lists; repeats accumulate.
/// Throws ValidationError on any other parameter.
analytics::LeaderboardFilter parse_filter(const std::vector<std::pair<std::string, std::string>>& params);

/// Route handling independent of the transport. Every payload is computed
/// from the runs' published states.
class Api {
public:
    Api(RunRegistry& registry, Clock& clock) : registry_(registry), clock_(clock) {}

    ApiResponse handle(const ApiRequest& request);

    /// Folds `<run_dir>/events.log` and registers it as a stopped replay run.
    std::shared_ptr<RunHandle> load_replay(const std::string& run_dir);

private:
    std::vector<std::shared_ptr<const persistence::ArenaState>> states() const;

    RunRegistry& registry_;
    Clock& clock_;
};

/// HTTP front end for Api.
class HttpServer {
public:
    explicit HttpServer(Api& api);
    ~HttpServer();

    /// Binds and serves on a background thread. Port 0 picks a free port.
    /// Throws Error when the port is unavailable.
    int start(const std::string& host, int port);
    void stop();
    int port() const { return port_; }

private:
    Api& api_;
    std::unique_ptr<httplib::Server> server_;
    std::thread thread_;
    int port_ = 0;
};

} // namespace arena::gateway

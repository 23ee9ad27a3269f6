#include "arena/gateway/api.hpp"

#include <filesystem>

#include <httplib.h>

#include "arena/core/errors.hpp"
#include "arena/core/text.hpp"
#include "arena/gateway/wiring.hpp"
#include "arena/persistence/exports.hpp"

namespace arena::gateway {

using nlohmann::json;

analytics::LeaderboardFilter parse_filter(const std::vector<std::pair<std::string, std::string>>& params) {
    analytics::LeaderboardFilter f;
    for (const auto& [key, value] : params) {
        std::set<std::string>* axis = nullptr;
        if (key == "agents") axis = &f.agents;
        else if (key == "assets") axis = &f.assets;
        else if (key == "models") axis = &f.models;
        else if (key == "strategies") axis = &f.strategies;
        else throw ValidationError("unknown query parameter '" + key + "'");
        for (const auto& part : text::split(value, ',')) {
            const auto item = std::string(text::trim(part));
            if (!item.empty()) axis->insert(key == "assets" ? text::to_upper(item) : item);
        }
    }
    return f;
}

namespace {

ApiResponse json_response(int status, const json& body) {
    ApiResponse r;
    r.status = status;
    r.body = body.dump() + "\n";
    return r;
}

ApiResponse error_response(int status, const std::string& message) {
    return json_response(status, json{{"error", message}});
}

} // namespace

std::vector<std::shared_ptr<const persistence::ArenaState>> Api::states() const {
    std::vector<std::shared_ptr<const persistence::ArenaState>> out;
    for (const auto& r : registry_.runs())
        if (auto s = r->state()) out.push_back(std::move(s));
    return out;
}

std::shared_ptr<RunHandle> Api::load_replay(const std::string& run_dir) {
    auto state = std::make_shared<persistence::ArenaState>(replay_run_dir(run_dir));
    std::string id = state->run_id();
    if (id.empty()) id = std::filesystem::path(run_dir).filename().string();
    auto handle = std::make_shared<RunHandle>(id, RunMode::Replay, std::chrono::floor<std::chrono::seconds>(clock_.now()));
    handle->publish(std::move(state));
    handle->transition(RunStatus::Running);
    handle->transition(RunStatus::Stopped);
    registry_.add(handle);
    return handle;
}

ApiResponse Api::handle(const ApiRequest& request) {
    try {
        const std::string version = registry_.data_version();
        const auto with_version = [&](ApiResponse r) {
            r.version = version;
            if (r.status == 200 && !request.if_none_match.empty() && request.if_none_match == version) {
                r.status = 304;
                r.body.clear();
            }
            return r;
        };

        if (request.method == "GET") {
            if (request.path == "/healthz") {
                if (!request.params.empty()) return error_response(400, "healthz takes no parameters");
                return json_response(200, json{{"status", "ok"}});
            }
            if (request.path == "/leaderboard" || request.path == "/equity") {
                const auto filter = parse_filter(request.params);
                const auto owned = states();
                std::vector<const persistence::ArenaState*> raw;
                for (const auto& s : owned) raw.push_back(s.get());
                json data;
                if (request.path == "/leaderboard")
                    data = persistence::leaderboard_to_json(persistence::ranked_rows(raw, filter));
                else
                    data = persistence::equity_to_json(raw, filter);
                return with_version(json_response(200, json{{"version", version}, {"data", std::move(data)}}));
            }
            if (request.path == "/runs") {
                if (!request.params.empty()) return error_response(400, "runs takes no parameters");
                json runs = json::array();
                for (const auto& r : registry_.runs()) runs.push_back(r->to_json());
                return with_version(json_response(200, json{{"version", version}, {"data", std::move(runs)}}));
            }
            return error_response(404, "no such endpoint");
        }

        if (request.method == "POST") {
            if (request.path == "/runs/replay") {
                json body;
                try {
                    body = json::parse(request.body);
                } catch (const json::exception&) {
                    return error_response(400, "body must be JSON with a run_dir field");
                }
                if (!body.is_object() || !body.contains("run_dir") || !body.at("run_dir").is_string())
                    return error_response(400, "body must be JSON with a run_dir field");
                const auto handle = load_replay(body.at("run_dir").get<std::string>());
                return json_response(201, handle->to_json());
            }
            const std::string prefix = "/runs/";
            const std::string suffix = "/stop";
            if (request.path.starts_with(prefix) && request.path.ends_with(suffix) &&
                request.path.size() > prefix.size() + suffix.size()) {
                const std::string id =
                    request.path.substr(prefix.size(), request.path.size() - prefix.size() - suffix.size());
                const auto run = registry_.find(id);
                if (!run) return error_response(404, "no run '" + id + "'");
                run->request_stop();
                return json_response(202, run->to_json());
            }
            return error_response(404, "no such endpoint");
        }
        return error_response(405, "method not allowed");
    } catch (const IntegrityError& e) {
        return error_response(422, e.what());
    } catch (const ValidationError& e) {
        return error_response(400, e.what());
    } catch (const Error& e) {
        return error_response(400, e.what());
    } catch (const std::exception& e) {
        return error_response(500, e.what());
    }
}

HttpServer::HttpServer(Api& api) : api_(api), server_(std::make_unique<httplib::Server>()) {
    const auto handler = [this](const httplib::Request& req, httplib::Response& res) {
        ApiRequest r;
        r.method = req.method;
        r.path = req.path;
        r.params.assign(req.params.begin(), req.params.end());
        r.body = req.body;
        r.if_none_match = req.get_header_value("If-None-Match");
        if (r.if_none_match.size() >= 2 && r.if_none_match.front() == '"' && r.if_none_match.back() == '"')
            r.if_none_match = r.if_none_match.substr(1, r.if_none_match.size() - 2);
        const ApiResponse out = api_.handle(r);
        res.status = out.status;
        if (!out.version.empty()) {
            res.set_header("ETag", "\"" + out.version + "\"");
            res.set_header("X-Data-Version", out.version);
        }
        if (out.status != 304) res.set_content(out.body, out.content_type);
    };
    server_->set_socket_options([](socket_t sock) {
        int yes = 1;
        ::setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof(yes));
    });
    server_->Get(".*", handler);
    server_->Post(".*", handler);
}

HttpServer::~HttpServer() { stop(); }

int HttpServer::start(const std::string& host, int port) {
    if (port == 0) {
        port_ = server_->bind_to_any_port(host);
        if (port_ < 0) throw Error("cannot bind " + host);
    } else {
        if (!server_->bind_to_port(host, port)) throw Error("port " + std::to_string(port) + " is unavailable on " + host);
        port_ = port;
    }
    thread_ = std::thread([this] { server_->listen_after_bind(); });
    server_->wait_until_ready();
    return port_;
}

void HttpServer::stop() {
    if (thread_.joinable()) {
        server_->stop();
        thread_.join();
    }
}

} // namespace arena::gateway

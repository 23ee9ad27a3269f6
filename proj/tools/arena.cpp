#include <atomic>
#include <csignal>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <memory>
#include <thread>

#include <CLI11.hpp>

#include "arena/core/errors.hpp"
#include "arena/core/text.hpp"
#include "arena/gateway/api.hpp"
#include "arena/gateway/http_clients.hpp"
#include "arena/gateway/live.hpp"
#include "arena/gateway/wiring.hpp"
#include "arena/persistence/exports.hpp"

namespace fs = std::filesystem;
using namespace arena;

namespace {

std::atomic<bool> g_stop{false};

void on_signal(int) { g_stop.store(true); }

std::string env_or(const char* name, std::string fallback) {
    const char* v = std::getenv(name);
    return v != nullptr && *v != '\0' ? std::string(v) : fallback;
}

int env_port() {
    const std::string v = env_or("ARENA_PORT", "8080");
    try {
        return std::stoi(v);
    } catch (const std::exception&) {
        throw ConfigError("ARENA_PORT is not a port number: " + v);
    }
}

std::string require_log(const std::string& dir) {
    const auto path = (fs::path(dir) / "events.log").string();
    if (!fs::exists(path)) throw Error("event log not found: " + path);
    return path;
}

int cmd_run(const std::string& config_path, const std::string& root) {
    const auto cfg = protocol::RunConfig::load(config_path);
    const auto dir = gateway::run_dir_for(root, cfg.run_id);
    const auto state = gateway::run_recorded(cfg, dir);
    persistence::write_exports(persistence::make_exports(state), dir);
    std::cout << "run " << cfg.run_id << ": " << state.last_seq() << " events written to " << dir << "\n";
    return 0;
}

int cmd_replay(const std::string& dir, const std::string& out) {
    require_log(dir);
    const auto state = gateway::replay_run_dir(dir);
    const auto target = out.empty() ? dir : out;
    persistence::write_exports(persistence::make_exports(state), target);
    std::cout << "replayed " << state.last_seq() << " events; exports in " << target << "\n";
    return 0;
}

int cmd_report(const std::string& dir, bool as_json) {
    require_log(dir);
    const auto state = gateway::replay_run_dir(dir);
    const auto bundle = persistence::make_exports(state);
    std::cout << (as_json ? bundle.leaderboard_json : bundle.metrics_csv);
    return 0;
}

int cmd_verify(const std::string& dir) {
    const auto scan = persistence::read_log_file(require_log(dir));
    persistence::ArenaState::replay(scan.events);
    std::cout << "ok: " << scan.events.size() << " events";
    if (!scan.events.empty()) std::cout << ", last seq " << scan.events.back().seq;
    if (scan.partial_tail) std::cout << ", unterminated final record ignored";
    std::cout << "\n";
    return 0;
}

void wait_for_signal() {
    while (!g_stop.load()) std::this_thread::sleep_for(std::chrono::milliseconds(200));
}

int cmd_serve(const std::vector<std::string>& dirs, const std::string& host, int port) {
    if (dirs.empty()) throw ConfigError("serve needs at least one run directory");
    SystemClock clock;
    gateway::RunRegistry registry;
    gateway::Api api(registry, clock);
    for (const auto& d : dirs) {
        require_log(d);
        api.load_replay(d);
    }
    gateway::HttpServer server(api);
    const int bound = server.start(host, port);
    std::cout << "serving " << dirs.size() << " run(s) on http://" << host << ":" << bound << "\n" << std::flush;
    wait_for_signal();
    server.stop();
    return 0;
}

int cmd_live(const std::string& config_path, const std::string& root, const std::string& host, int port,
             bool serve) {
    const auto cfg = protocol::RunConfig::load(config_path);
    const auto dir = gateway::run_dir_for(root, cfg.run_id);
    fs::create_directories(dir);
    text::write_file((fs::path(dir) / "config.json").string(), cfg.to_json().dump(2) + "\n");

    gateway::RunResources resources(cfg);
    auto market = protocol::load_market(cfg);
    SystemClock clock;
    persistence::EventLog log((fs::path(dir) / "events.log").string());
    protocol::Session session(cfg, market, resources.briefs(), resources.provider_for(), clock, log,
                              protocol::SessionOptions{true});

    std::unique_ptr<gateway::HttpFeedConnector> feed;
    gateway::LiveFeeds feeds;
    if (!cfg.data.feed_url.empty()) {
        feed = std::make_unique<gateway::HttpFeedConnector>(cfg.data.feed_url, cfg.universe());
        feeds.prices.push_back(feed.get());
        feeds.news.push_back(feed.get());
    }

    gateway::RunRegistry registry;
    auto handle = std::make_shared<gateway::RunHandle>(cfg.run_id, gateway::RunMode::Live,
                                                       std::chrono::floor<std::chrono::seconds>(clock.now()));
    registry.add(handle);
    gateway::Api api(registry, clock);
    gateway::HttpServer server(api);
    if (serve) std::cout << "serving on http://" << host << ":" << server.start(host, port) << "\n" << std::flush;

    std::thread watcher([&] {
        while (!g_stop.load() && handle->status() != gateway::RunStatus::Stopped &&
               handle->status() != gateway::RunStatus::Failed)
            std::this_thread::sleep_for(std::chrono::milliseconds(200));
        handle->request_stop();
    });
    gateway::LiveRunner runner(session, market, feeds, *handle, clock, resources.summarizer());
    runner.on_tick([](Date d) { std::cout << "tick " << d.to_string() << "\n" << std::flush; });
    const auto status = runner.run();
    watcher.join();
    server.stop();
    persistence::write_exports(persistence::make_exports(session.state()), dir);
    std::cout << "run " << cfg.run_id << " " << gateway::to_string(status) << "\n";
    if (status == gateway::RunStatus::Failed) {
        std::cerr << "error: " << handle->failure() << "\n";
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Trading agent arena: run, replay, verify and serve benchmark runs"};
    app.require_subcommand(1);

    const std::string default_root = env_or("ARENA_DATA_ROOT", ".");
    std::string config_path, dir, out, root = default_root, host = "127.0.0.1";
    std::vector<std::string> dirs;
    int port = 0;
    bool as_json = false, serve = false;

    auto* run = app.add_subcommand("run", "Run a configured session from recorded inputs into <root>/runs/<run_id>");
    run->add_option("config", config_path, "Run config JSON")->required()->check(CLI::ExistingFile);
    run->add_option("--root", root, "Data root (env ARENA_DATA_ROOT)");

    auto* replay = app.add_subcommand("replay", "Rebuild a run from its event log and write metrics exports");
    replay->add_option("dir", dir, "Run directory holding events.log")->required();
    replay->add_option("--out", out, "Export directory (default: the run directory)");

    auto* report = app.add_subcommand("report", "Print the leaderboard of a run");
    report->add_option("dir", dir, "Run directory holding events.log")->required();
    report->add_flag("--json", as_json, "Print JSON instead of CSV");

    auto* verify = app.add_subcommand("verify", "Check event log integrity");
    verify->add_option("dir", dir, "Run directory holding events.log")->required();

    auto* live = app.add_subcommand("live", "Trade live at the configured daily decision time");
    live->add_option("config", config_path, "Run config JSON")->required()->check(CLI::ExistingFile);
    live->add_option("--root", root, "Data root (env ARENA_DATA_ROOT)");
    live->add_flag("--serve", serve, "Also serve the HTTP API");
    live->add_option("--host", host, "Bind address");
    live->add_option("--port", port, "Port (env ARENA_PORT)");

    auto* srv = app.add_subcommand("serve", "Serve the HTTP API over replayed runs");
    srv->add_option("dirs", dirs, "Run directories")->required();
    srv->add_option("--host", host, "Bind address");
    srv->add_option("--port", port, "Port (env ARENA_PORT)");

    CLI11_PARSE(app, argc, argv);

    std::signal(SIGINT, on_signal);
    std::signal(SIGTERM, on_signal);
    try {
        if (port == 0 && (live->parsed() || srv->parsed())) port = env_port();
        if (run->parsed()) return cmd_run(config_path, root);
        if (replay->parsed()) return cmd_replay(dir, out);
        if (report->parsed()) return cmd_report(dir, as_json);
        if (verify->parsed()) return cmd_verify(dir);
        if (live->parsed()) return cmd_live(config_path, root, host, port, serve);
        if (srv->parsed()) return cmd_serve(dirs, host, port);
    } catch (const IntegrityError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

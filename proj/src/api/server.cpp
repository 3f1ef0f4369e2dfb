#include "nlpkg/api/server.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <iostream>
#include <thread>

#include <httplib.h>

#include "nlpkg/kg/snapshot.hpp"

namespace nlpkg::api {

std::string cors_origin(const std::vector<std::string>& allowlist, const std::string& origin) {
    if (std::find(allowlist.begin(), allowlist.end(), "*") != allowlist.end()) return origin.empty() ? "*" : origin;
    if (!origin.empty() && std::find(allowlist.begin(), allowlist.end(), origin) != allowlist.end()) return origin;
    return {};
}

namespace {

void add_cors(const ApiConfig& cfg, const httplib::Request& req, httplib::Response& res) {
    const auto allowed = cors_origin(cfg.cors_allowlist, req.get_header_value("Origin"));
    if (allowed.empty()) return;
    res.set_header("Access-Control-Allow-Origin", allowed);
    res.set_header("Vary", "Origin");
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
}

}  // namespace

bool serve(ApiService& service, const ApiConfig& cfg, const OnListening& on_listening) {
    httplib::Server svr;
    auto handler = [&](const httplib::Request& req, httplib::Response& res) {
        ApiRequest ar;
        ar.method = req.method;
        ar.path = req.path;
        for (const auto& [k, v] : req.params) ar.query.emplace(k, v);
        ar.body = req.body;
        const auto out = service.handle(ar);
        res.status = out.status;
        res.set_content(out.dump(), "application/json");
        add_cors(cfg, req, res);
    };
    svr.Get(".*", handler);
    svr.Post(".*", handler);
    svr.Options(".*", [&](const httplib::Request& req, httplib::Response& res) {
        res.status = 204;
        add_cors(cfg, req, res);
    });
    if (cfg.static_dir) svr.set_mount_point("/ui", cfg.static_dir->string());

    int port = cfg.port;
    if (port == 0) {
        port = svr.bind_to_any_port(cfg.bind);
        if (port < 0) return false;
    } else if (!svr.bind_to_port(cfg.bind, port)) {
        return false;
    }
    std::cerr << "listening on " << cfg.bind << ":" << port << "\n";
    std::thread notify;
    if (on_listening) {
        notify = std::thread([&] {
            svr.wait_until_ready();
            on_listening(port, [&svr] { svr.stop(); });
        });
    }
    const bool ok = svr.listen_after_bind();
    if (notify.joinable()) notify.join();
    return ok;
}

int run_server(const ApiConfig& cfg) {
    cfg.validate();
    const auto search_cfg = cfg.search_config ? search::load_search_config(*cfg.search_config) : search::SearchConfig{};
    auto provider = rag::make_provider(rag::load_provider_config(cfg.provider_config));
    auto sessions = std::make_shared<rag::SessionStore>(cfg.sessions_dir);
    ApiService service(load_snapshot(cfg.data_dir, search_cfg, cfg.embedding_dim), provider, sessions);

    std::atomic<bool> stop{false};
    std::mutex mu;
    std::condition_variable cv;
    std::thread watcher;
    if (cfg.reload_seconds > 0) {
        watcher = std::thread([&] {
            const auto pubs = kg::DataPaths{cfg.data_dir}.publications();
            auto seen = std::filesystem::last_write_time(pubs);
            std::unique_lock lock(mu);
            while (!cv.wait_for(lock, std::chrono::seconds(cfg.reload_seconds), [&] { return stop.load(); })) {
                try {
                    const auto now = std::filesystem::last_write_time(pubs);
                    if (now == seen) continue;
                    service.publish(load_snapshot(cfg.data_dir, search_cfg, cfg.embedding_dim));
                    seen = now;
                    std::cerr << "snapshot reloaded\n";
                } catch (const std::exception& e) {
                    std::cerr << "reload failed, keeping the current snapshot: " << e.what() << "\n";
                }
            }
        });
    }
    const bool ok = serve(service, cfg);
    {
        std::lock_guard lock(mu);
        stop = true;
    }
    cv.notify_all();
    if (watcher.joinable()) watcher.join();
    if (!ok) {
        std::cerr << "could not bind " << cfg.bind << ":" << cfg.port << "\n";
        return 1;
    }
    return 0;
}

}  // namespace nlpkg::api

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "nlpkg/api/config.hpp"
#include "nlpkg/api/service.hpp"

namespace nlpkg::api {

// Value for Access-Control-Allow-Origin, empty when the origin is not allowed.
std::string cors_origin(const std::vector<std::string>& allowlist, const std::string& origin);

using OnListening = std::function<void(int port, std::function<void()> stop)>;

// Blocks until the server stops. Returns false if the socket could not be bound.
// Port 0 binds any free port; `on_listening` receives the bound port once ready.
bool serve(ApiService& service, const ApiConfig& cfg, const OnListening& on_listening = {});

// Builds the service described by `cfg` (validating it first) and serves it,
// reloading the snapshot when reload_seconds > 0 and publications.jsonl changes.
int run_server(const ApiConfig& cfg);

}  // namespace nlpkg::api

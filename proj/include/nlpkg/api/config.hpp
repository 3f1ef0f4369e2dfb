#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nlpkg/error.hpp"

namespace nlpkg::api {

class ConfigError : public Error {
public:
    using Error::Error;
};

struct ApiConfig {
    std::string bind = "127.0.0.1";
    int port = 8080;
    std::filesystem::path data_dir;         // snapshot written by ingest/refresh
    std::filesystem::path sessions_dir;
    std::filesystem::path provider_config;
    std::optional<std::filesystem::path> search_config;
    std::optional<std::filesystem::path> static_dir;  // served under /ui
    std::vector<std::string> cors_allowlist;          // "*" allows any origin
    std::size_t embedding_dim = 256;                  // hashing query embedder
    int reload_seconds = 0;                           // 0: never poll the snapshot

    // Throws ConfigError naming every referenced path that does not exist.
    void validate() const;
};

// Relative paths resolve against `base_dir`.
ApiConfig api_config_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir = {});
ApiConfig load_api_config(const std::filesystem::path& path);

}  // namespace nlpkg::api

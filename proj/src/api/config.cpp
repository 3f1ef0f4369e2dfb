#include "nlpkg/api/config.hpp"

#include "nlpkg/kg/snapshot.hpp"
#include "nlpkg/util/jsonl.hpp"

namespace nlpkg::api {

namespace fs = std::filesystem;

void ApiConfig::validate() const {
    if (port < 0 || port > 65535) throw ConfigError("port out of range");
    std::vector<fs::path> required{data_dir, sessions_dir, provider_config};
    if (!data_dir.empty()) {
        const kg::DataPaths paths{data_dir};
        required.push_back(paths.fos_nodes());
        required.push_back(paths.fos_edges());
        required.push_back(paths.publications());
    }
    if (search_config) required.push_back(*search_config);
    if (static_dir) required.push_back(*static_dir);
    std::string missing;
    for (const auto& p : required) {
        if (p.empty()) missing += missing.empty() ? "(unset path)" : ", (unset path)";
        else if (!fs::exists(p)) missing += (missing.empty() ? "" : ", ") + p.string();
    }
    if (!missing.empty()) throw ConfigError("missing paths: " + missing);
}

ApiConfig api_config_from_json(const nlohmann::json& j, const fs::path& base_dir) {
    auto path = [&](const std::string& key) -> fs::path {
        fs::path p = j.at(key).get<std::string>();
        return p.is_relative() && !base_dir.empty() ? base_dir / p : p;
    };
    ApiConfig c;
    try {
        c.bind = j.value("bind", c.bind);
        c.port = j.value("port", c.port);
        c.data_dir = path("data_dir");
        c.sessions_dir = path("sessions_dir");
        c.provider_config = path("provider_config");
        if (j.contains("search_config")) c.search_config = path("search_config");
        if (j.contains("static_dir")) c.static_dir = path("static_dir");
        c.cors_allowlist = j.value("cors_allowlist", c.cors_allowlist);
        c.embedding_dim = j.value("embedding_dim", c.embedding_dim);
        c.reload_seconds = j.value("reload_seconds", c.reload_seconds);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("bad api config: ") + e.what());
    }
    return c;
}

ApiConfig load_api_config(const fs::path& path) {
    try {
        return api_config_from_json(nlohmann::json::parse(jsonl::read_text(path)), path.parent_path());
    } catch (const nlohmann::json::parse_error& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

}  // namespace nlpkg::api

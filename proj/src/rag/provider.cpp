#include "nlpkg/rag/provider.hpp"

#include <cstdio>

#include "nlpkg/rag/http_provider.hpp"
#include "nlpkg/rag/mock_provider.hpp"
#include "nlpkg/search/embedder.hpp"
#include "nlpkg/util/jsonl.hpp"

namespace nlpkg::rag {

nlohmann::json to_json(const std::vector<Message>& messages) {
    auto arr = nlohmann::json::array();
    for (const auto& m : messages) arr.push_back({{"role", m.role}, {"content", m.content}});
    return arr;
}

std::string prompt_hash(const std::vector<Message>& messages) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(search::fnv1a64(to_json(messages).dump())));
    return buf;
}

ProviderConfig provider_config_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir) {
    ProviderConfig c;
    c.kind = j.value("kind", c.kind);
    c.base_url = j.value("base_url", c.base_url);
    c.model = j.value("model", c.model);
    c.temperature = j.value("temperature", c.temperature);
    c.api_key_env = j.value("api_key_env", c.api_key_env);
    c.timeout_seconds = j.value("timeout_seconds", c.timeout_seconds);
    if (j.contains("mock_script")) {
        std::filesystem::path p = j.at("mock_script").get<std::string>();
        c.mock_script = p.is_relative() && !base_dir.empty() ? base_dir / p : p;
    }
    if (c.kind != "http" && c.kind != "mock") throw Error("unknown provider kind '" + c.kind + "'");
    if (c.kind == "http" && c.base_url.empty()) throw Error("http provider needs base_url");
    if (c.kind == "mock" && c.mock_script.empty()) throw Error("mock provider needs mock_script");
    return c;
}

ProviderConfig load_provider_config(const std::filesystem::path& path) {
    return provider_config_from_json(nlohmann::json::parse(jsonl::read_text(path)), path.parent_path());
}

std::shared_ptr<LlmProvider> make_provider(const ProviderConfig& cfg) {
    if (cfg.kind == "mock") return std::make_shared<MockProvider>(MockProvider::from_file(cfg.mock_script));
    return std::make_shared<HttpProvider>(cfg);
}

}  // namespace nlpkg::rag

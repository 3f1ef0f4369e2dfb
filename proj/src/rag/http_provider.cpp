#include "nlpkg/rag/http_provider.hpp"

#include <cstdlib>

#include <httplib.h>

namespace nlpkg::rag {

namespace {

nlohmann::json post_json(const ProviderConfig& cfg, const Endpoint& ep, const std::string& route,
                         const nlohmann::json& payload) {
    httplib::Client client(ep.origin);
    client.set_connection_timeout(cfg.timeout_seconds);
    client.set_read_timeout(cfg.timeout_seconds);
    httplib::Headers headers;
    if (const char* key = std::getenv(cfg.api_key_env.c_str()); key && *key) {
        headers.emplace("Authorization", std::string("Bearer ") + key);
    }
    auto res = client.Post(ep.path + route, headers, payload.dump(), "application/json");
    if (!res) throw ProviderError("request to " + ep.origin + ep.path + route + " failed: " + httplib::to_string(res.error()));
    if (res->status < 200 || res->status >= 300) {
        throw ProviderError("provider returned HTTP " + std::to_string(res->status) + ": " + res->body.substr(0, 200));
    }
    try {
        return nlohmann::json::parse(res->body);
    } catch (const nlohmann::json::exception& e) {
        throw ProviderError(std::string("provider reply is not JSON: ") + e.what());
    }
}

}  // namespace

Endpoint parse_endpoint(const std::string& base_url) {
    const auto scheme_end = base_url.find("://");
    if (scheme_end == std::string::npos) throw ProviderError("base_url needs a scheme: '" + base_url + "'");
    const auto scheme = base_url.substr(0, scheme_end);
    if (scheme != "http" && scheme != "https") throw ProviderError("unsupported scheme '" + scheme + "'");
    const auto path_start = base_url.find('/', scheme_end + 3);
    Endpoint ep;
    ep.origin = base_url.substr(0, path_start);
    if (ep.origin.size() == scheme_end + 3) throw ProviderError("base_url has no host: '" + base_url + "'");
    if (path_start != std::string::npos) ep.path = base_url.substr(path_start);
    while (!ep.path.empty() && ep.path.back() == '/') ep.path.pop_back();
    return ep;
}

std::string completion_text(const nlohmann::json& body) {
    if (auto c = body.find("choices"); c != body.end() && c->is_array() && !c->empty()) {
        const auto& first = (*c)[0];
        if (auto m = first.find("message"); m != first.end() && m->contains("content") && (*m)["content"].is_string()) {
            return (*m)["content"].get<std::string>();
        }
    }
    if (auto c = body.find("content"); c != body.end() && c->is_string()) return c->get<std::string>();
    throw ProviderError("provider reply has no completion text");
}

HttpProvider::HttpProvider(ProviderConfig cfg) : cfg_(std::move(cfg)), endpoint_(parse_endpoint(cfg_.base_url)) {}

std::string HttpProvider::complete(const std::vector<Message>& messages, const SamplingParams& params) const {
    nlohmann::json payload{{"model", cfg_.model}, {"messages", to_json(messages)}, {"temperature", params.temperature}};
    if (params.max_tokens) payload["max_tokens"] = *params.max_tokens;
    return completion_text(post_json(cfg_, endpoint_, "/chat/completions", payload));
}

HttpEmbedder::HttpEmbedder(ProviderConfig cfg, std::size_t dim)
    : cfg_(std::move(cfg)), endpoint_(parse_endpoint(cfg_.base_url)), dim_(dim) {}

std::vector<float> HttpEmbedder::embed(std::string_view text) const {
    const auto body = post_json(cfg_, endpoint_, "/embeddings", {{"model", cfg_.model}, {"input", std::string(text)}});
    try {
        auto v = body.at("data").at(0).at("embedding").get<std::vector<float>>();
        if (v.size() != dim_) {
            throw kg::DimensionMismatch("embedding service returned dimension " + std::to_string(v.size()) +
                                        ", expected " + std::to_string(dim_));
        }
        return v;
    } catch (const nlohmann::json::exception& e) {
        throw ProviderError(std::string("embedding reply malformed: ") + e.what());
    }
}

}  // namespace nlpkg::rag

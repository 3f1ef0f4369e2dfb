#include "nlpkg/rag/mock_provider.hpp"

#include "nlpkg/util/jsonl.hpp"

namespace nlpkg::rag {

MockScript mock_script_from_json(const nlohmann::json& j) {
    MockScript s;
    if (auto it = j.find("by_hash"); it != j.end()) {
        for (auto& [k, v] : it->items()) s.by_hash[k] = v.get<std::string>();
    }
    if (auto it = j.find("rules"); it != j.end()) {
        for (const auto& r : *it) {
            s.rules.push_back({r.value("system_contains", ""), r.value("contains", ""), r.at("reply").get<std::string>()});
        }
    }
    if (auto it = j.find("default"); it != j.end()) s.fallback = it->get<std::string>();
    return s;
}

MockProvider::MockProvider(MockScript script) : script_(std::move(script)) {}

MockProvider::MockProvider(Responder responder) : responder_(std::move(responder)) {}

MockProvider::MockProvider(const MockProvider& other) : script_(other.script_), responder_(other.responder_) {
    std::lock_guard lock(other.mu_);
    calls_ = other.calls_;
}

MockProvider MockProvider::from_file(const std::filesystem::path& path) {
    try {
        return MockProvider(mock_script_from_json(nlohmann::json::parse(jsonl::read_text(path))));
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path.string(), 0, e.what());
    }
}

std::string MockProvider::complete(const std::vector<Message>& messages, const SamplingParams&) const {
    {
        std::lock_guard lock(mu_);
        calls_.push_back(messages);
    }
    if (responder_) return responder_(messages);

    const auto& s = *script_;
    if (auto it = s.by_hash.find(prompt_hash(messages)); it != s.by_hash.end()) return it->second;

    std::string system, last_user;
    for (const auto& m : messages) {
        if (m.role == "system") system += m.content;
        if (m.role == "user") last_user = m.content;
    }
    for (const auto& r : s.rules) {
        if (system.find(r.system_contains) != std::string::npos && last_user.find(r.contains) != std::string::npos) {
            return r.reply;
        }
    }
    if (s.fallback) return *s.fallback;
    throw ProviderError("mock script has no reply for prompt " + prompt_hash(messages));
}

std::vector<std::vector<Message>> MockProvider::calls() const {
    std::lock_guard lock(mu_);
    return calls_;
}

std::size_t MockProvider::call_count() const {
    std::lock_guard lock(mu_);
    return calls_.size();
}

}  // namespace nlpkg::rag

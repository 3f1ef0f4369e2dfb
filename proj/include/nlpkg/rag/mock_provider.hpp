#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "nlpkg/rag/provider.hpp"

namespace nlpkg::rag {

// Script format:
//   {"by_hash": {"<prompt_hash>": "reply"},
//    "rules": [{"system_contains": "...", "contains": "...", "reply": "..."}],
//    "default": "reply"}
// by_hash wins, then the first rule whose substrings all occur (system
// message / last user message), then default. No match is a ProviderError.
struct MockRule {
    std::string system_contains;
    std::string contains;
    std::string reply;
};

struct MockScript {
    std::map<std::string, std::string> by_hash;
    std::vector<MockRule> rules;
    std::optional<std::string> fallback;
};

MockScript mock_script_from_json(const nlohmann::json& j);

class MockProvider : public LlmProvider {
public:
    using Responder = std::function<std::string(const std::vector<Message>&)>;

    explicit MockProvider(MockScript script);
    explicit MockProvider(Responder responder);
    static MockProvider from_file(const std::filesystem::path& path);

    std::string complete(const std::vector<Message>& messages, const SamplingParams& params) const override;
    std::string name() const override { return "mock"; }

    // Every message list seen, in call order.
    std::vector<std::vector<Message>> calls() const;
    std::size_t call_count() const;

    MockProvider(const MockProvider& other);

private:
    std::optional<MockScript> script_;
    Responder responder_;
    mutable std::mutex mu_;
    mutable std::vector<std::vector<Message>> calls_;
};

}  // namespace nlpkg::rag

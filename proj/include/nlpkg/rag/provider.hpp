#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nlpkg/error.hpp"

namespace nlpkg::rag {

struct Message {
    std::string role;  // system | user | assistant
    std::string content;

    friend bool operator==(const Message&, const Message&) = default;
};

struct SamplingParams {
    double temperature = 0.0;
    std::optional<int> max_tokens;
};

class ProviderError : public Error {
public:
    using Error::Error;
};

// The reply broke the structure the prompt asked for.
class ReplyFormatError : public Error {
public:
    using Error::Error;
};

// One completion per call, no state carried between calls. Implementations
// must be safe to call from several threads.
class LlmProvider {
public:
    virtual ~LlmProvider() = default;
    virtual std::string complete(const std::vector<Message>& messages, const SamplingParams& params) const = 0;
    virtual std::string name() const = 0;
};

nlohmann::json to_json(const std::vector<Message>& messages);

// FNV-1a 64 of the compact JSON of the message list, as 16 hex digits.
std::string prompt_hash(const std::vector<Message>& messages);

struct ProviderConfig {
    std::string kind = "http";  // http | mock
    std::string base_url;
    std::string model;
    double temperature = 0.0;
    std::string api_key_env = "LLM_API_KEY";
    int timeout_seconds = 60;
    std::filesystem::path mock_script;  // relative paths resolve against the config file
};

ProviderConfig provider_config_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir = {});
ProviderConfig load_provider_config(const std::filesystem::path& path);

std::shared_ptr<LlmProvider> make_provider(const ProviderConfig& cfg);

}  // namespace nlpkg::rag

#pragma once

#include <string>
#include <vector>

#include "nlpkg/rag/provider.hpp"
#include "nlpkg/search/embedder.hpp"

namespace nlpkg::rag {

struct Endpoint {
    std::string origin;  // scheme://host[:port]
    std::string path;    // no trailing slash
};

// Throws ProviderError on a malformed URL.
Endpoint parse_endpoint(const std::string& base_url);

// Reads choices[0].message.content, falling back to a top-level "content".
std::string completion_text(const nlohmann::json& body);

// POSTs {model, messages, temperature[, max_tokens]} to <base_url>/chat/completions
// with a bearer token from the configured environment variable.
class HttpProvider : public LlmProvider {
public:
    explicit HttpProvider(ProviderConfig cfg);
    std::string complete(const std::vector<Message>& messages, const SamplingParams& params) const override;
    std::string name() const override { return "http:" + cfg_.model; }

private:
    ProviderConfig cfg_;
    Endpoint endpoint_;
};

// POSTs {model, input} to <base_url>/embeddings and reads data[0].embedding.
class HttpEmbedder : public search::QueryEmbedder {
public:
    HttpEmbedder(ProviderConfig cfg, std::size_t dim);
    std::vector<float> embed(std::string_view text) const override;
    std::size_t dim() const override { return dim_; }

private:
    ProviderConfig cfg_;
    Endpoint endpoint_;
    std::size_t dim_;
};

}  // namespace nlpkg::rag

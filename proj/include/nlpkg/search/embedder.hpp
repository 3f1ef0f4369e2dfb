#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "nlpkg/kg/corpus.hpp"

namespace nlpkg::search {

class QueryEmbedder {
public:
    virtual ~QueryEmbedder() = default;
    virtual std::vector<float> embed(std::string_view text) const = 0;
    virtual std::size_t dim() const = 0;
};

// Feature hashing of analyzed tokens (FNV-1a 64 mod dim), L2-normalized.
// Offline stand-in for a learned encoder.
class HashingEmbedder : public QueryEmbedder {
public:
    explicit HashingEmbedder(std::size_t dim = 256);
    std::vector<float> embed(std::string_view text) const override;
    std::size_t dim() const override { return dim_; }

private:
    std::size_t dim_;
};

std::uint64_t fnv1a64(std::string_view s);

// Title and abstract, the text a publication vector is computed from.
std::vector<float> embed_publication(const QueryEmbedder& e, const kg::Publication& p);

}  // namespace nlpkg::search

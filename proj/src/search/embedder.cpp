#include "nlpkg/search/embedder.hpp"

#include <cmath>
#include <string>

#include "nlpkg/text/analyzer.hpp"

namespace nlpkg::search {

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

HashingEmbedder::HashingEmbedder(std::size_t dim) : dim_(dim) {
    if (dim_ == 0) throw Error("embedding dimension must be positive");
}

std::vector<float> HashingEmbedder::embed(std::string_view text) const {
    std::vector<double> acc(dim_, 0.0);
    for (const auto& tok : text::analyze(text)) acc[fnv1a64(tok) % dim_] += 1.0;
    double n = 0.0;
    for (double x : acc) n += x * x;
    n = std::sqrt(n);
    std::vector<float> out(dim_, 0.0f);
    if (n > 0.0) {
        for (std::size_t i = 0; i < dim_; ++i) out[i] = static_cast<float>(acc[i] / n);
    }
    return out;
}

std::vector<float> embed_publication(const QueryEmbedder& e, const kg::Publication& p) {
    return e.embed(p.title + "\n" + p.abstract);
}

}  // namespace nlpkg::search

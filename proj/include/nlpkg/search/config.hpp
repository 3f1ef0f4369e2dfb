#pragma once

#include <cstddef>
#include <filesystem>

#include <json.hpp>

namespace nlpkg::search {

struct RerankWeights {
    double relevance = 0.7;
    double citations = 0.15;
    double recency = 0.15;
};

struct SearchConfig {
    double alpha = 0.8;  // weight of the dense list in fusion
    std::size_t rrf_k = 60;
    std::size_t rerank_top_k = 2000;
    std::size_t page_size = 20;
    double bm25_k1 = 1.2;
    double bm25_b = 0.75;
    RerankWeights rerank;
    // Dense hits at or below this cosine similarity are not retrieved.
    double dense_min_similarity = 0.0;

    // Throws InvalidConfig.
    void validate() const;
};

SearchConfig search_config_from_json(const nlohmann::json& j);
nlohmann::json to_json(const SearchConfig& c);
SearchConfig load_search_config(const std::filesystem::path& path);

}  // namespace nlpkg::search

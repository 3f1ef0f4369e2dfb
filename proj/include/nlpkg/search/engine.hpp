#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nlpkg/kg/corpus.hpp"
#include "nlpkg/search/bm25.hpp"
#include "nlpkg/search/config.hpp"
#include "nlpkg/search/dense.hpp"
#include "nlpkg/search/embedder.hpp"
#include "nlpkg/search/filters.hpp"
#include "nlpkg/search/ranked_list.hpp"

namespace nlpkg::search {

struct YearCount {
    int year;
    std::size_t count;
};

struct FacetCount {
    std::string id;
    std::size_t count;
};

struct Facets {
    std::vector<YearCount> years;  // ascending year
    std::vector<FacetCount> fos;   // top 10, count desc then id
    std::vector<FacetCount> authors;
};

Facets compute_facets(const RankedList& results, const kg::Corpus& corpus, std::size_t top_n = 10);

struct SearchRequest {
    std::string query;
    FilterSpec filters;
    std::size_t page = 1;  // 1-based
    std::optional<std::size_t> page_size;
    // Overrides the embedder.
    std::optional<std::vector<float>> query_vector;
};

struct SearchPage {
    std::string query;
    std::size_t page = 1;
    std::size_t page_size = 0;
    std::size_t total = 0;  // after filtering
    std::vector<RankedEntry> results;
    Facets facets;
};

// Intermediate lists of one search, for inspection.
struct SearchStages {
    RankedList sparse, dense, fused, reranked, filtered;
};

// Immutable once constructed; safe for concurrent searches.
class SearchEngine {
public:
    // Without an embedder (and without request vectors) the dense list is empty.
    SearchEngine(std::shared_ptr<const kg::Corpus> corpus, SearchConfig cfg,
                 std::shared_ptr<const QueryEmbedder> embedder = nullptr);

    // Full filtered ranking.
    RankedList retrieve(const std::string& query, const FilterSpec& filters = {},
                        const std::optional<std::vector<float>>& query_vector = std::nullopt,
                        SearchStages* stages = nullptr) const;

    SearchPage search(const SearchRequest& req, SearchStages* stages = nullptr) const;

    const kg::Corpus& corpus() const { return *corpus_; }
    std::shared_ptr<const kg::Corpus> corpus_ptr() const { return corpus_; }
    const SearchConfig& config() const { return cfg_; }
    const Bm25Index& sparse_index() const { return bm25_; }
    const DenseIndex& dense_index() const { return dense_; }

private:
    std::shared_ptr<const kg::Corpus> corpus_;
    SearchConfig cfg_;
    std::shared_ptr<const QueryEmbedder> embedder_;
    Bm25Index bm25_;
    DenseIndex dense_;
};

}  // namespace nlpkg::search

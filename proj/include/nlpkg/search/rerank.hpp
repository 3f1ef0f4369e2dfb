#pragma once

#include "nlpkg/kg/corpus.hpp"
#include "nlpkg/search/config.hpp"
#include "nlpkg/search/ranked_list.hpp"

namespace nlpkg::search {

struct RerankFeatures {
    double relevance = 0.0;  // fused score, min-max over the head
    double citations = 0.0;  // log(1 + c) / max over the head
    double recency = 0.0;    // year, min-max over the head
};

// Features of the first `head` entries of `fused`, in list order.
std::vector<RerankFeatures> rerank_features(const RankedList& fused, const kg::Corpus& corpus, std::size_t head);

// The first rerank_top_k entries are re-scored and re-sorted; the rest
// follow in their original order with their original scores.
RankedList rerank(const RankedList& fused, const kg::Corpus& corpus, const SearchConfig& cfg);

}  // namespace nlpkg::search

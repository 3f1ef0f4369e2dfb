#pragma once

#include <cstddef>

#include "nlpkg/search/config.hpp"
#include "nlpkg/search/ranked_list.hpp"

namespace nlpkg::search {

// Contribution of a document at 1-based `rank` in one source; 0 when absent.
double rrf_term(std::size_t rank, std::size_t rrf_k);

// Alpha weights the dense term and (1 - alpha) the sparse one.
double weighted_rrf(std::size_t sparse_rank, std::size_t dense_rank, double alpha, std::size_t rrf_k);

// Ranks are positions in the inputs; scores in the inputs are ignored.
// A repeated id keeps its first position.
RankedList rrf_fuse(const RankedList& sparse, const RankedList& dense, const SearchConfig& cfg);

}  // namespace nlpkg::search

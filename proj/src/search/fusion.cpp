#include "nlpkg/search/fusion.hpp"

#include <map>

namespace nlpkg::search {

double rrf_term(std::size_t rank, std::size_t rrf_k) {
    if (rank == 0) return 0.0;
    return 1.0 / static_cast<double>(rrf_k + rank);
}

double weighted_rrf(std::size_t sparse_rank, std::size_t dense_rank, double alpha, std::size_t rrf_k) {
    return (1.0 - alpha) * rrf_term(sparse_rank, rrf_k) + alpha * rrf_term(dense_rank, rrf_k);
}

RankedList rrf_fuse(const RankedList& sparse, const RankedList& dense, const SearchConfig& cfg) {
    std::map<std::string, std::pair<std::size_t, std::size_t>> ranks;
    for (std::size_t i = 0; i < sparse.entries.size(); ++i) {
        auto& r = ranks[sparse.entries[i].id];
        if (r.first == 0) r.first = i + 1;
    }
    for (std::size_t i = 0; i < dense.entries.size(); ++i) {
        auto& r = ranks[dense.entries[i].id];
        if (r.second == 0) r.second = i + 1;
    }
    RankedList out;
    out.source = Source::fused;
    out.entries.reserve(ranks.size());
    for (const auto& [id, r] : ranks) {
        out.entries.push_back({id, weighted_rrf(r.first, r.second, cfg.alpha, cfg.rrf_k), r.first, r.second});
    }
    sort_ranked(out.entries);
    return out;
}

}  // namespace nlpkg::search

#include "nlpkg/search/engine.hpp"

#include <algorithm>
#include <map>

#include "nlpkg/search/fusion.hpp"
#include "nlpkg/search/rerank.hpp"

namespace nlpkg::search {

namespace {

std::vector<FacetCount> top_counts(const std::map<std::string, std::size_t>& counts, std::size_t n) {
    std::vector<FacetCount> out;
    for (const auto& [id, c] : counts) out.push_back({id, c});
    std::stable_sort(out.begin(), out.end(), [](const FacetCount& a, const FacetCount& b) { return a.count > b.count; });
    if (out.size() > n) out.resize(n);
    return out;
}

}  // namespace

Facets compute_facets(const RankedList& results, const kg::Corpus& corpus, std::size_t top_n) {
    std::map<int, std::size_t> years;
    std::map<std::string, std::size_t> fos, authors;
    for (const auto& e : results.entries) {
        const auto* p = corpus.find(e.id);
        if (!p) continue;
        ++years[p->year];
        for (const auto& f : p->fos_ids) ++fos[f];
        for (const auto& a : p->authors) ++authors[a];
    }
    Facets f;
    for (const auto& [y, c] : years) f.years.push_back({y, c});
    f.fos = top_counts(fos, top_n);
    f.authors = top_counts(authors, top_n);
    return f;
}

SearchEngine::SearchEngine(std::shared_ptr<const kg::Corpus> corpus, SearchConfig cfg,
                           std::shared_ptr<const QueryEmbedder> embedder)
    : corpus_(std::move(corpus)), cfg_(cfg), embedder_(std::move(embedder)) {
    if (!corpus_) throw Error("search engine needs a corpus");
    cfg_.validate();
    bm25_ = Bm25Index::build(*corpus_, {cfg_.bm25_k1, cfg_.bm25_b});
    dense_ = DenseIndex::build(*corpus_);
    if (embedder_ && dense_.size() > 0 && embedder_->dim() != dense_.dim()) {
        throw kg::DimensionMismatch("embedder dimension " + std::to_string(embedder_->dim()) +
                                    " differs from corpus vectors " + std::to_string(dense_.dim()));
    }
}

RankedList SearchEngine::retrieve(const std::string& query, const FilterSpec& filters,
                                  const std::optional<std::vector<float>>& query_vector,
                                  SearchStages* stages) const {
    filters.validate();
    SearchStages local;
    SearchStages& s = stages ? *stages : local;

    s.sparse = bm25_.topk(query, cfg_.rerank_top_k);
    s.dense = RankedList{Source::dense, {}};
    if (dense_.size() > 0) {
        if (query_vector) {
            s.dense = dense_.topk(*query_vector, cfg_.rerank_top_k, cfg_.dense_min_similarity);
        } else if (embedder_) {
            s.dense = dense_.topk(embedder_->embed(query), cfg_.rerank_top_k, cfg_.dense_min_similarity);
        }
    }
    s.fused = rrf_fuse(s.sparse, s.dense, cfg_);
    s.reranked = rerank(s.fused, *corpus_, cfg_);
    s.filtered = apply_filters(s.reranked, *corpus_, filters);
    return s.filtered;
}

SearchPage SearchEngine::search(const SearchRequest& req, SearchStages* stages) const {
    if (req.page == 0) throw InvalidFilter("page numbers start at 1");
    const auto filtered = retrieve(req.query, req.filters, req.query_vector, stages);

    SearchPage page;
    page.query = req.query;
    page.page = req.page;
    page.page_size = req.page_size.value_or(cfg_.page_size);
    if (page.page_size == 0) throw InvalidFilter("page_size must be positive");
    page.total = filtered.size();
    const std::size_t start = (req.page - 1) * page.page_size;
    if (start < filtered.size()) {
        const std::size_t end = std::min(filtered.size(), start + page.page_size);
        page.results.assign(filtered.entries.begin() + static_cast<std::ptrdiff_t>(start),
                            filtered.entries.begin() + static_cast<std::ptrdiff_t>(end));
    }
    page.facets = compute_facets(filtered, *corpus_);
    return page;
}

}  // namespace nlpkg::search

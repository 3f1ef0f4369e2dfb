#include "nlpkg/search/rerank.hpp"

#include <algorithm>
#include <cmath>

namespace nlpkg::search {

std::vector<RerankFeatures> rerank_features(const RankedList& fused, const kg::Corpus& corpus, std::size_t head) {
    head = std::min(head, fused.entries.size());
    std::vector<RerankFeatures> f(head);
    if (head == 0) return f;

    std::vector<double> score(head), cites(head), year(head);
    for (std::size_t i = 0; i < head; ++i) {
        const auto& e = fused.entries[i];
        const auto* pub = corpus.find(e.id);
        score[i] = e.score;
        cites[i] = pub ? std::log1p(static_cast<double>(std::max<std::int64_t>(pub->citation_count, 0))) : 0.0;
        year[i] = pub ? static_cast<double>(pub->year) : 0.0;
    }
    auto [smin, smax] = std::minmax_element(score.begin(), score.end());
    auto [ymin, ymax] = std::minmax_element(year.begin(), year.end());
    const double cmax = *std::max_element(cites.begin(), cites.end());
    for (std::size_t i = 0; i < head; ++i) {
        f[i].relevance = *smax > *smin ? (score[i] - *smin) / (*smax - *smin) : 1.0;
        f[i].citations = cmax > 0.0 ? cites[i] / cmax : 0.0;
        f[i].recency = *ymax > *ymin ? (year[i] - *ymin) / (*ymax - *ymin) : 0.0;
    }
    return f;
}

RankedList rerank(const RankedList& fused, const kg::Corpus& corpus, const SearchConfig& cfg) {
    const auto features = rerank_features(fused, corpus, cfg.rerank_top_k);
    const auto& w = cfg.rerank;
    RankedList out;
    out.source = Source::reranked;
    out.entries = fused.entries;
    for (std::size_t i = 0; i < features.size(); ++i) {
        const auto& f = features[i];
        out.entries[i].score = w.relevance * f.relevance + w.citations * f.citations + w.recency * f.recency;
    }
    std::vector<RankedEntry> head(out.entries.begin(), out.entries.begin() + static_cast<std::ptrdiff_t>(features.size()));
    sort_ranked(head);
    std::copy(head.begin(), head.end(), out.entries.begin());
    return out;
}

}  // namespace nlpkg::search

#include "nlpkg/search/bm25.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "nlpkg/text/analyzer.hpp"

namespace nlpkg::search {

Bm25Index Bm25Index::build(const kg::Corpus& corpus, Bm25Params params) {
    Bm25Index idx;
    idx.params_ = params;
    std::size_t total = 0;
    for (const auto& pub : corpus.publications()) {
        const auto doc = static_cast<std::uint32_t>(idx.doc_ids_.size());
        auto tokens = text::analyze(pub.title);
        auto rest = text::analyze(pub.abstract);
        tokens.insert(tokens.end(), rest.begin(), rest.end());

        std::unordered_map<std::string, std::uint32_t> tf;
        for (const auto& t : tokens) ++tf[t];
        std::vector<std::pair<std::string, std::uint32_t>> sorted(tf.begin(), tf.end());
        std::sort(sorted.begin(), sorted.end());
        for (auto& [term, n] : sorted) idx.postings_[term].push_back({doc, n});

        idx.doc_ids_.push_back(pub.id);
        idx.doc_len_.push_back(tokens.size());
        idx.doc_index_.emplace(pub.id, doc);
        total += tokens.size();
    }
    if (!idx.doc_ids_.empty()) idx.avgdl_ = static_cast<double>(total) / static_cast<double>(idx.doc_ids_.size());
    return idx;
}

double Bm25Index::idf(const std::string& term) const {
    auto it = postings_.find(term);
    const double n = it == postings_.end() ? 0.0 : static_cast<double>(it->second.size());
    const double N = static_cast<double>(doc_ids_.size());
    return std::log(1.0 + (N - n + 0.5) / (n + 0.5));
}

double Bm25Index::term_weight(double idf, std::uint32_t tf, std::size_t len) const {
    const double f = tf;
    const double norm = avgdl_ > 0.0 ? static_cast<double>(len) / avgdl_ : 0.0;
    return idf * (f * (params_.k1 + 1.0)) / (f + params_.k1 * (1.0 - params_.b + params_.b * norm));
}

std::vector<std::string> Bm25Index::query_terms(std::string_view query) const {
    auto tokens = text::analyze(query);
    if (tokens.empty()) throw EmptyQuery("query has no searchable terms");
    std::set<std::string> uniq(tokens.begin(), tokens.end());
    return {uniq.begin(), uniq.end()};
}

RankedList Bm25Index::topk(std::string_view query, std::size_t k) const {
    const auto terms = query_terms(query);
    std::unordered_map<std::uint32_t, double> acc;
    for (const auto& term : terms) {
        auto it = postings_.find(term);
        if (it == postings_.end()) continue;
        const double w = idf(term);
        for (const auto& p : it->second) acc[p.doc] += term_weight(w, p.tf, doc_len_[p.doc]);
    }
    RankedList out;
    out.source = Source::sparse;
    out.entries.reserve(acc.size());
    for (const auto& [doc, s] : acc) out.entries.push_back({doc_ids_[doc], s, 0, 0});
    sort_ranked(out.entries);
    if (out.entries.size() > k) out.entries.resize(k);
    for (std::size_t i = 0; i < out.entries.size(); ++i) out.entries[i].sparse_rank = i + 1;
    return out;
}

double Bm25Index::score(std::string_view query, std::string_view doc_id) const {
    const auto terms = query_terms(query);
    auto d = doc_index_.find(std::string(doc_id));
    if (d == doc_index_.end()) return 0.0;
    double s = 0.0;
    for (const auto& term : terms) {
        auto it = postings_.find(term);
        if (it == postings_.end()) continue;
        auto p = std::lower_bound(it->second.begin(), it->second.end(), d->second,
                                  [](const Posting& a, std::uint32_t doc) { return a.doc < doc; });
        if (p != it->second.end() && p->doc == d->second) s += term_weight(idf(term), p->tf, doc_len_[p->doc]);
    }
    return s;
}

}  // namespace nlpkg::search

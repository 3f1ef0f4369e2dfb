#include "nlpkg/search/dense.hpp"

#include <cmath>

namespace nlpkg::search {

namespace {

double norm(std::span<const float> v) {
    double s = 0.0;
    for (float x : v) s += static_cast<double>(x) * x;
    return std::sqrt(s);
}

double dot(std::span<const float> a, std::span<const float> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<double>(a[i]) * b[i];
    return s;
}

}  // namespace

double cosine(std::span<const float> a, std::span<const float> b) {
    if (a.size() != b.size()) throw kg::DimensionMismatch("cosine of vectors with different dimensions");
    const double na = norm(a), nb = norm(b);
    if (na == 0.0 || nb == 0.0) return 0.0;
    return dot(a, b) / (na * nb);
}

void DenseIndex::add(std::string id, std::vector<float> v) {
    if (ids_.empty() && dim_ == 0) dim_ = v.size();
    if (v.size() != dim_) {
        throw kg::DimensionMismatch("vector for '" + id + "' has dimension " + std::to_string(v.size()) +
                                    ", index has " + std::to_string(dim_));
    }
    norms_.push_back(norm(v));
    data_.insert(data_.end(), v.begin(), v.end());
    ids_.push_back(std::move(id));
}

DenseIndex DenseIndex::build(const kg::Corpus& corpus) {
    DenseIndex idx;
    for (const auto& p : corpus.publications()) {
        if (p.embedding) idx.add(p.id, *p.embedding);
    }
    return idx;
}

RankedList DenseIndex::topk(std::span<const float> query, std::size_t k, double min_similarity) const {
    RankedList out;
    out.source = Source::dense;
    if (ids_.empty()) return out;
    if (query.size() != dim_) {
        throw kg::DimensionMismatch("query has dimension " + std::to_string(query.size()) + ", index has " +
                                    std::to_string(dim_));
    }
    const double qn = norm(query);
    for (std::size_t i = 0; i < ids_.size(); ++i) {
        double sim = 0.0;
        if (qn > 0.0 && norms_[i] > 0.0) {
            sim = dot(query, std::span<const float>(data_.data() + i * dim_, dim_)) / (qn * norms_[i]);
        }
        if (sim > min_similarity) out.entries.push_back({ids_[i], sim, 0, 0});
    }
    sort_ranked(out.entries);
    if (out.entries.size() > k) out.entries.resize(k);
    for (std::size_t i = 0; i < out.entries.size(); ++i) out.entries[i].dense_rank = i + 1;
    return out;
}

}  // namespace nlpkg::search

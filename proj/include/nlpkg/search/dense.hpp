#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "nlpkg/kg/corpus.hpp"
#include "nlpkg/search/ranked_list.hpp"

namespace nlpkg::search {

double cosine(std::span<const float> a, std::span<const float> b);

// Exact brute-force cosine retrieval.
class DenseIndex {
public:
    DenseIndex() = default;

    // Throws kg::DimensionMismatch when vectors disagree in length.
    void add(std::string id, std::vector<float> v);

    static DenseIndex build(const kg::Corpus& corpus);

    // Entries with similarity <= min_similarity are dropped.
    RankedList topk(std::span<const float> query, std::size_t k,
                    double min_similarity = -2.0) const;

    std::size_t dim() const { return dim_; }
    std::size_t size() const { return ids_.size(); }

private:
    std::vector<std::string> ids_;
    std::vector<float> data_;
    std::vector<double> norms_;
    std::size_t dim_ = 0;
};

}  // namespace nlpkg::search

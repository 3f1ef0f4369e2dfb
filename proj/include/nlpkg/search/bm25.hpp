#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "nlpkg/kg/corpus.hpp"
#include "nlpkg/search/ranked_list.hpp"

namespace nlpkg::search {

struct Bm25Params {
    double k1 = 1.2;
    double b = 0.75;
};

// Okapi BM25 over analyze(title) + analyze(abstract). Query terms are
// deduplicated before scoring.
class Bm25Index {
public:
    static Bm25Index build(const kg::Corpus& corpus, Bm25Params params = {});

    // Throws EmptyQuery when the query has no tokens.
    RankedList topk(std::string_view query, std::size_t k) const;

    double score(std::string_view query, std::string_view doc_id) const;

    // ln(1 + (N - n + 0.5) / (n + 0.5)); never negative.
    double idf(const std::string& term) const;

    std::size_t num_docs() const { return doc_ids_.size(); }
    double avgdl() const { return avgdl_; }
    const Bm25Params& params() const { return params_; }

private:
    struct Posting {
        std::uint32_t doc;
        std::uint32_t tf;
    };

    std::vector<std::string> query_terms(std::string_view query) const;
    double term_weight(double idf, std::uint32_t tf, std::size_t len) const;

    Bm25Params params_;
    std::vector<std::string> doc_ids_;
    std::vector<std::size_t> doc_len_;
    std::unordered_map<std::string, std::uint32_t> doc_index_;
    double avgdl_ = 0.0;
    std::unordered_map<std::string, std::vector<Posting>> postings_;
};

}  // namespace nlpkg::search

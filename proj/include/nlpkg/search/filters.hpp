#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>

#include "nlpkg/kg/corpus.hpp"
#include "nlpkg/search/ranked_list.hpp"

namespace nlpkg::search {

class InvalidFilter : public Error {
public:
    using Error::Error;
};

struct FilterSpec {
    std::optional<std::set<std::string>> fos_ids;    // any of
    std::optional<std::set<std::string>> venue_ids;  // any of
    std::optional<int> year_from;
    std::optional<int> year_to;
    std::optional<std::int64_t> min_citations;
    bool survey_only = false;

    // Throws InvalidFilter when year_from > year_to.
    void validate() const;
    bool empty() const;
    bool matches(const kg::Publication& p) const;
};

// Keeps entries whose publication matches; ids missing from the corpus are dropped
// unless no filter is set.
RankedList apply_filters(const RankedList& results, const kg::Corpus& corpus, const FilterSpec& filters);

}  // namespace nlpkg::search

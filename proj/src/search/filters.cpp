#include "nlpkg/search/filters.hpp"

#include <algorithm>

namespace nlpkg::search {

void FilterSpec::validate() const {
    if (year_from && year_to && *year_from > *year_to) {
        throw InvalidFilter("year range " + std::to_string(*year_from) + ".." + std::to_string(*year_to) +
                            " is empty");
    }
}

bool FilterSpec::empty() const {
    return !fos_ids && !venue_ids && !year_from && !year_to && !min_citations && !survey_only;
}

bool FilterSpec::matches(const kg::Publication& p) const {
    if (survey_only && !p.is_survey) return false;
    if (year_from && p.year < *year_from) return false;
    if (year_to && p.year > *year_to) return false;
    if (min_citations && p.citation_count < *min_citations) return false;
    if (venue_ids && !venue_ids->count(p.venue)) return false;
    if (fos_ids && std::none_of(p.fos_ids.begin(), p.fos_ids.end(),
                                [&](const std::string& f) { return fos_ids->count(f) > 0; })) {
        return false;
    }
    return true;
}

RankedList apply_filters(const RankedList& results, const kg::Corpus& corpus, const FilterSpec& filters) {
    filters.validate();
    if (filters.empty()) return results;
    RankedList out;
    out.source = results.source;
    for (const auto& e : results.entries) {
        const auto* pub = corpus.find(e.id);
        if (pub && filters.matches(*pub)) out.entries.push_back(e);
    }
    return out;
}

}  // namespace nlpkg::search

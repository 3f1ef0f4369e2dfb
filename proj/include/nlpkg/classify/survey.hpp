#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "nlpkg/kg/corpus.hpp"

namespace nlpkg::classify {

const std::vector<std::string>& default_survey_phrases();

// True iff the case-folded title contains one of `phrases`.
bool survey_candidate(const kg::Publication& pub,
                      const std::vector<std::string>& phrases = default_survey_phrases());

struct SurveyDataset {
    std::vector<std::string> positives;  // sorted
    std::vector<std::string> negatives;  // sorted
    std::uint64_t seed = 0;
    std::size_t ratio = 15;
    // Set when fewer than ratio x |positives| negatives were available.
    bool insufficient_negatives = false;
};

class UnknownPublication : public Error {
public:
    using Error::Error;
};

/// Samples ratio x |positives| negatives uniformly without replacement from
/// the corpus minus the positives. The draw depends only on the seed and the
/// sorted candidate ids, never on corpus order or the standard library.
SurveyDataset build_survey_dataset(const kg::Corpus& corpus, const std::vector<std::string>& positives,
                                   std::size_t ratio, std::uint64_t seed);

// survey_dataset.jsonl: {pub_id, label: 0|1, seed, ratio}.
void save_survey_dataset(const SurveyDataset& ds, const std::filesystem::path& path);
SurveyDataset load_survey_dataset(const std::filesystem::path& path);

}  // namespace nlpkg::classify

#pragma once

#include <filesystem>
#include <string>
#include <unordered_map>
#include <vector>

#include "nlpkg/kg/corpus.hpp"
#include "nlpkg/kg/fos_graph.hpp"

namespace nlpkg::classify {

class UnknownFos : public Error {
public:
    using Error::Error;
};

struct FosLexicon {
    struct Entry {
        std::string fos_id;
        kg::Tier tier = kg::Tier::extended;
        std::vector<std::vector<std::string>> sequences;  // stemmed name and synonyms
    };
    std::vector<Entry> entries;  // sorted by fos_id
};

// Stemmed token sequences for every extended-tier node (all nodes when
// `extended_only` is false). Names that analyze to nothing are skipped.
FosLexicon build_lexicon(const kg::FosGraph& graph, bool extended_only = true);

// pub_id -> top-level FoS ids, produced by the external step-1 model.
using ExternalLabels = std::unordered_map<std::string, std::vector<std::string>>;

// external_labels.jsonl: {pub_id, fos_ids}.
ExternalLabels load_external_labels(const std::filesystem::path& path);

/// Step 1: the externally supplied labels for `pub`. Every id must name a
/// top_level node of `graph`, otherwise UnknownFos. Absent publications get
/// no labels.
std::vector<std::string> classify_fos_step1(const kg::Publication& pub, const ExternalLabels& labels,
                                            const kg::FosGraph& graph);

/// Step 2: ids whose stemmed name or synonym occurs as a contiguous run of
/// the stemmed title tokens.
std::vector<std::string> classify_fos_step2(const kg::Publication& pub, const FosLexicon& lexicon);

struct ClassificationReport {
    std::size_t publications = 0;
    std::size_t changed = 0;
    std::size_t labelled = 0;  // publications with at least one FoS afterwards
};

// Sets fos_ids = step1 ∪ step2 on every publication. Re-running is a no-op.
ClassificationReport classify_corpus(kg::Corpus& corpus, const kg::FosGraph& graph,
                                     const ExternalLabels& labels);

}  // namespace nlpkg::classify

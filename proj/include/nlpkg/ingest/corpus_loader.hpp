#pragma once

#include <filesystem>

#include "nlpkg/kg/snapshot.hpp"

namespace nlpkg::ingest {

struct LoadedCorpus {
    kg::Corpus corpus;
    kg::CorpusLoadReport report;
};

/// Reads a publications JSONL file, deduplicating by id. Malformed lines
/// raise ParseError with the line number.
LoadedCorpus load_corpus(const std::filesystem::path& path);

struct MergeReport {
    std::size_t added = 0;
    std::size_t updated = 0;
};

// Adds new ids from `incoming`; with `overwrite`, known ids are replaced
// (keeping their derived labels when the incoming record has none).
MergeReport merge_corpus(kg::Corpus& into, const kg::Corpus& incoming, bool overwrite);

}  // namespace nlpkg::ingest

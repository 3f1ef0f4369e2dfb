#pragma once

#include <filesystem>
#include <optional>

namespace nlpkg::api {

struct RefreshOptions {
    std::filesystem::path data_dir;
    std::filesystem::path incoming;  // publications JSONL fetched since the last run
    std::optional<std::filesystem::path> external_labels;
    std::optional<std::filesystem::path> survey_model;  // logistic model JSON; keyword rule otherwise
    bool overwrite = false;
    std::size_t embedding_dim = 256;  // used when the snapshot has no vectors yet
};

struct RefreshReport {
    std::size_t added = 0;
    std::size_t updated = 0;
    std::size_t reclassified = 0;
    std::size_t surveys = 0;   // among added/updated
    std::size_t embedded = 0;
    std::size_t fulltexts_copied = 0;
};

// One batch step of the preprocessing loop: merge new publications into the
// snapshot, copy their full texts under <data_dir>/fulltext, classify FoS and
// survey status, embed missing vectors and write the snapshot back.
RefreshReport refresh(const RefreshOptions& opts);

}  // namespace nlpkg::api

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "nlpkg/error.hpp"

namespace nlpkg::kg {

struct Publication {
    std::string id;
    std::string title;
    std::string abstract;
    int year = 0;
    std::string venue;
    std::vector<std::string> authors;
    std::int64_t citation_count = 0;
    std::vector<std::string> cited_ids;
    std::optional<std::string> tldr;
    std::optional<std::string> fulltext;  // path relative to the corpus directory
    std::vector<std::string> fos_ids;      // sorted, unique
    bool is_survey = false;
    std::optional<std::vector<float>> embedding;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

// Schema of one publications.jsonl line. The embedding is omitted when
// `with_embedding` is false (embeddings usually live in embeddings.jsonl).
nlohmann::json to_json(const Publication& p, bool with_embedding = false);
Publication publication_from_json(const nlohmann::json& j);

class Corpus {
public:
    Corpus() = default;
    explicit Corpus(std::filesystem::path base_dir) : base_dir_(std::move(base_dir)) {}

    /// Returns false (and leaves the corpus untouched) when the id exists.
    /// Throws DimensionMismatch if the embedding disagrees with the corpus.
    bool add(Publication p);

    // Insert or overwrite by id.
    void upsert(Publication p);

    void set_embedding(std::string_view id, std::vector<float> v);

    const Publication* find(std::string_view id) const;
    Publication* find_mutable(std::string_view id);
    bool contains(std::string_view id) const { return find(id) != nullptr; }

    const std::vector<Publication>& publications() const { return pubs_; }
    std::vector<Publication>& publications_mutable() { return pubs_; }
    std::size_t size() const { return pubs_.size(); }

    // 0 until the first embedding is attached.
    std::size_t embedding_dim() const { return dim_; }

    const std::filesystem::path& base_dir() const { return base_dir_; }
    void set_base_dir(std::filesystem::path p) { base_dir_ = std::move(p); }

    bool has_fulltext(const Publication& p) const;
    std::optional<std::string> read_fulltext(const Publication& p) const;

private:
    void check_dim(const std::vector<float>& v, std::string_view id);

    std::filesystem::path base_dir_;
    std::vector<Publication> pubs_;
    std::unordered_map<std::string, std::size_t> by_id_;
    std::size_t dim_ = 0;
};

}  // namespace nlpkg::kg

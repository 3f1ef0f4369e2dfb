#pragma once

#include <filesystem>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "nlpkg/kg/corpus.hpp"
#include "nlpkg/kg/fos_graph.hpp"

namespace nlpkg::kg {

// File layout of a data directory.
struct DataPaths {
    std::filesystem::path dir;

    std::filesystem::path fos_nodes() const { return dir / "fos_nodes.jsonl"; }
    std::filesystem::path fos_edges() const { return dir / "fos_edges.jsonl"; }
    std::filesystem::path publications() const { return dir / "publications.jsonl"; }
    std::filesystem::path embeddings() const { return dir / "embeddings.jsonl"; }
};

nlohmann::json to_json(const FieldOfStudy& f);
FieldOfStudy fos_from_json(const nlohmann::json& j);

/// Loads fos_nodes.jsonl and fos_edges.jsonl. Errors carry file and line.
/// With `require_rooted`, nodes unreachable from a first-level node raise
/// InvariantViolation.
FosGraph load_fos_graph(const std::filesystem::path& nodes, const std::filesystem::path& edges,
                        bool require_rooted = true);
void save_fos_graph(const FosGraph& g, const std::filesystem::path& nodes,
                    const std::filesystem::path& edges);

struct DuplicateRecord {
    std::string id;
    std::size_t line = 0;
};

struct CorpusLoadReport {
    std::size_t loaded = 0;
    std::vector<DuplicateRecord> duplicates;
};

// The first occurrence of an id wins; later ones are reported.
Corpus load_publications(const std::filesystem::path& path, CorpusLoadReport* report = nullptr);
void save_publications(const Corpus& c, const std::filesystem::path& path);

// embeddings.jsonl: {pub_id, vector}. Returns the number attached.
std::size_t attach_embeddings(Corpus& c, const std::filesystem::path& path);
void save_embeddings(const Corpus& c, const std::filesystem::path& path);

struct KnowledgeGraph {
    FosGraph fos;
    Corpus corpus;
};

KnowledgeGraph load_knowledge_graph(const DataPaths& paths);
void save_knowledge_graph(const KnowledgeGraph& kg, const DataPaths& paths);

/// Holder for an immutable snapshot. Readers take a shared_ptr and keep it
/// as long as they like; writers build a replacement and publish it.
template <typename T>
class SnapshotStore {
public:
    SnapshotStore() = default;
    explicit SnapshotStore(std::shared_ptr<const T> initial) : current_(std::move(initial)) {}

    std::shared_ptr<const T> get() const {
        std::lock_guard lock(mu_);
        return current_;
    }

    void publish(std::shared_ptr<const T> next) {
        std::lock_guard lock(mu_);
        current_ = std::move(next);
    }

    /// Copies the current snapshot, applies `mutate` to the copy and
    /// publishes it. If `mutate` throws, nothing is published. Writers are
    /// serialized; readers are never blocked for longer than a pointer copy.
    template <typename F>
    void update(F&& mutate) {
        std::lock_guard writer(write_mu_);
        auto base = get();
        auto next = base ? std::make_shared<T>(*base) : std::make_shared<T>();
        mutate(*next);
        publish(std::move(next));
    }

private:
    mutable std::mutex mu_;
    std::mutex write_mu_;
    std::shared_ptr<const T> current_;
};

}  // namespace nlpkg::kg

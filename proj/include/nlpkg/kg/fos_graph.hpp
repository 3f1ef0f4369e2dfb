#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "nlpkg/error.hpp"

namespace nlpkg::kg {

enum class Tier { top_level, extended };

std::string_view to_string(Tier t);
Tier parse_tier(std::string_view s);

struct FieldOfStudy {
    std::string id;
    std::string name;
    std::vector<std::string> synonyms;
    std::optional<std::string> description;
    Tier tier = Tier::extended;
};

// Directed child -> parent ("child is a hyponym of parent").
struct HyponymEdge {
    std::string child;
    std::string parent;

    friend bool operator==(const HyponymEdge&, const HyponymEdge&) = default;
    friend auto operator<=>(const HyponymEdge&, const HyponymEdge&) = default;
};

struct GraphStats {
    std::size_t n_fos = 0;
    std::size_t n_hyponym_edges = 0;
    std::size_t max_depth = 0;

    friend bool operator==(const GraphStats&, const GraphStats&) = default;
};

struct Subgraph {
    std::string root;
    std::vector<FieldOfStudy> nodes;  // sorted by id
    std::vector<HyponymEdge> edges;   // sorted by (child, parent)
};

class DuplicateName : public Error {
public:
    using Error::Error;
};
class DuplicateId : public Error {
public:
    using Error::Error;
};
class CycleError : public Error {
public:
    using Error::Error;
};
class SelfLoop : public Error {
public:
    using Error::Error;
};
class UnknownId : public Error {
public:
    using Error::Error;
};
class Unreachable : public Error {
public:
    using Error::Error;
};
class InvariantViolation : public Error {
public:
    using Error::Error;
};

/// The Fields-of-Study hierarchy: an acyclic graph of hyponym edges with
/// name and synonym lookup under normalize_name().
///
/// Navigation starts from first-level nodes: top_level-tier nodes without
/// parents. Depth and ideal path lengths are measured from them.
class FosGraph {
public:
    /// Inserts `node` and returns its id. An empty id is derived from the
    /// normalized name. Throws DuplicateName when the name or any synonym
    /// normalizes to an existing node's name or synonym, DuplicateId on an id
    /// clash, InvariantViolation on an empty name.
    std::string add_fos(FieldOfStudy node);

    /// Adds child -> parent. Returns false if the edge already exists.
    /// Throws SelfLoop, UnknownId, or CycleError when `parent` is already a
    /// descendant of `child`.
    bool add_hyponym(std::string_view child, std::string_view parent);

    // Attaches an extra synonym; same collision rules as add_fos.
    void add_synonym(std::string_view id, std::string_view synonym);
    void set_description(std::string_view id, std::string description);

    bool contains(std::string_view id) const;
    const FieldOfStudy& node(std::string_view id) const;  // throws UnknownId
    const FieldOfStudy* find(std::string_view id) const;
    // Lookup by canonical name or synonym, compared after normalize_name().
    const FieldOfStudy* find_by_name(std::string_view surface) const;

    std::vector<std::string> parents(std::string_view id) const;   // sorted
    std::vector<std::string> children(std::string_view id) const;  // sorted
    bool is_first_level(std::string_view id) const;

    /// Descendants of `root` within `depth` hyponym edges, plus the root's
    /// direct parents. Edges: parent -> root, and every edge leaving a node
    /// at distance < depth.
    Subgraph subgraph(std::string_view root, std::size_t depth) const;

    /// max(1, shortest edge count from any first-level node to `target`).
    std::size_t ideal_steps(std::string_view target) const;

    GraphStats stats() const;

    std::vector<std::string> ids() const;  // sorted
    std::vector<HyponymEdge> edges() const;  // sorted
    const std::vector<FieldOfStudy>& nodes() const { return nodes_; }
    std::size_t size() const { return nodes_.size(); }

    // Ids of nodes that cannot be reached from any first-level node.
    std::vector<std::string> unrooted() const;

private:
    std::size_t index_of(std::string_view id) const;
    bool reaches(std::size_t from, std::size_t to) const;

    std::vector<FieldOfStudy> nodes_;
    std::unordered_map<std::string, std::size_t> by_id_;
    std::unordered_map<std::string, std::size_t> by_name_;
    std::vector<std::vector<std::size_t>> parents_;
    std::vector<std::vector<std::size_t>> children_;
    std::size_t n_edges_ = 0;
};

// Id derived from a display name: normalized, spaces replaced by '-'.
std::string slug(std::string_view name);

}  // namespace nlpkg::kg

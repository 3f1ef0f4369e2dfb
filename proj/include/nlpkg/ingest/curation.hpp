#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "nlpkg/ingest/candidates.hpp"
#include "nlpkg/kg/fos_graph.hpp"

namespace nlpkg::ingest {

enum class CurationStatus { pending, accepted, corrected, rejected };

std::string_view to_string(CurationStatus s);

struct Triple {
    std::string child;
    std::string relation = "hyponym-of";
    std::string parent;

    friend bool operator==(const Triple&, const Triple&) = default;
};

struct CurationItem {
    enum class Kind { entity, relation };

    std::string id;
    Kind kind = Kind::relation;
    std::string entity;                 // entity items: canonical surface
    std::vector<std::string> synonyms;  // entity items: other cluster members
    std::optional<Triple> triple;       // relation items
    std::size_t count = 0;
    CurationStatus status = CurationStatus::pending;
    std::optional<Triple> correction;
    std::optional<std::string> parent;  // where an accepted entity was placed
    std::optional<std::string> reason;  // rejection reason
};

nlohmann::json to_json(const CurationItem& item);
CurationItem curation_item_from_json(const nlohmann::json& j);

// Entities first, then relations; each by descending count, then surface.
std::vector<CurationItem> curation_queue(const CandidateSets& candidates);

std::vector<CurationItem> load_queue(const std::filesystem::path& path);
void save_queue(const std::vector<CurationItem>& items, const std::filesystem::path& path);

struct Decision {
    enum class Action { accept, correct, reject };

    Action action = Action::accept;
    std::optional<Triple> correction;   // required for correct
    std::optional<std::string> parent;  // entity accept: name or id of the parent
    std::string reason;                 // reject
};

class CurationError : public Error {
public:
    using Error::Error;
};

/// Appends one JSON line per resolved item.
class CurationLog {
public:
    explicit CurationLog(std::filesystem::path path) : path_(std::move(path)) {}
    void record(const CurationItem& item) const;

private:
    std::filesystem::path path_;
};

/// Applies a curator decision. Accepted and corrected items are inserted into
/// `graph`: surfaces resolve to existing nodes by name or synonym, unknown
/// ones become extended-tier nodes, and the hyponym edge is added. Graph
/// errors (CycleError, DuplicateName, ...) propagate and leave both `graph`
/// and the item unchanged. Rejections touch nothing but the item.
CurationItem resolve(const CurationItem& item, const Decision& decision, kg::FosGraph& graph,
                     const CurationLog* log = nullptr);

}  // namespace nlpkg::ingest

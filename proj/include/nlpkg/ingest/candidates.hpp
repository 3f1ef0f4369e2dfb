#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "nlpkg/ingest/synonyms.hpp"

namespace nlpkg::ingest {

enum class MentionKind { entity, hyponym_relation };

// One extraction hit from the upstream entity/relation tagger.
struct CandidateMention {
    std::string surface;
    std::string doc_id;
    MentionKind kind = MentionKind::entity;
    std::string head;  // relations: the hyponym (child)
    std::string tail;  // relations: the hypernym (parent)
};

CandidateMention mention_from_json(const nlohmann::json& j);
nlohmann::json to_json(const CandidateMention& m);
std::vector<CandidateMention> load_candidates(const std::filesystem::path& path);

struct ExtractionThresholds {
    std::size_t t_entities = 100;
    std::size_t t_relations = 3;
    // "More frequently than": count > t. With strict off, count >= t.
    bool strict = true;

    bool keeps_entity(std::size_t count) const { return strict ? count > t_entities : count >= t_entities; }
    bool keeps_relation(std::size_t count) const { return strict ? count > t_relations : count >= t_relations; }
};

struct EntityCandidate {
    SynonymCluster cluster;
    std::size_t count = 0;
};

struct RelationCandidate {
    std::string child;   // canonical surfaces
    std::string parent;
    std::size_t count = 0;

    friend bool operator==(const RelationCandidate&, const RelationCandidate&) = default;
};

struct CandidateSets {
    std::vector<EntityCandidate> entities;    // sorted by canonical
    std::vector<RelationCandidate> relations;  // sorted by (child, parent)
};

/// Clusters every surface (entity surfaces, relation heads and tails), pools
/// mention counts per cluster, and keeps clusters and canonical relation
/// triples whose counts pass the thresholds. Relations whose head and tail
/// fall into the same cluster are dropped. Independent of mention order.
CandidateSets filter_candidates(const std::vector<CandidateMention>& mentions,
                                const ExtractionThresholds& thresholds,
                                const std::vector<AbbreviationPair>& observed = {});

}  // namespace nlpkg::ingest

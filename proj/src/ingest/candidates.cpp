#include "nlpkg/ingest/candidates.hpp"

#include <map>
#include <unordered_map>

#include "nlpkg/error.hpp"
#include "nlpkg/text/normalize.hpp"
#include "nlpkg/util/jsonl.hpp"

namespace nlpkg::ingest {

using nlohmann::json;

CandidateMention mention_from_json(const json& j) {
    CandidateMention m;
    m.surface = text::trim(j.value("surface", ""));
    m.doc_id = j.value("doc_id", "");
    const auto kind = j.value("kind", "entity");
    if (kind == "entity") {
        m.kind = MentionKind::entity;
    } else if (kind == "hyponym_relation") {
        m.kind = MentionKind::hyponym_relation;
    } else {
        throw Error("unknown mention kind '" + kind + "'");
    }
    m.head = text::trim(j.value("head", ""));
    m.tail = text::trim(j.value("tail", ""));
    if (m.surface.empty()) throw Error("mention surface must be non-empty");
    if (m.kind == MentionKind::hyponym_relation && (m.head.empty() || m.tail.empty())) {
        throw Error("relation mention needs both head and tail");
    }
    return m;
}

json to_json(const CandidateMention& m) {
    json j{{"surface", m.surface},
           {"doc_id", m.doc_id},
           {"kind", m.kind == MentionKind::entity ? "entity" : "hyponym_relation"}};
    if (m.kind == MentionKind::hyponym_relation) {
        j["head"] = m.head;
        j["tail"] = m.tail;
    }
    return j;
}

std::vector<CandidateMention> load_candidates(const std::filesystem::path& path) {
    std::vector<CandidateMention> out;
    jsonl::for_each(path, [&](const json& j, std::size_t line) {
        try {
            out.push_back(mention_from_json(j));
        } catch (const Error& e) {
            throw ParseError(path.string(), line, e.what());
        }
    });
    return out;
}

CandidateSets filter_candidates(const std::vector<CandidateMention>& mentions,
                                const ExtractionThresholds& thresholds,
                                const std::vector<AbbreviationPair>& observed) {
    std::vector<std::string> surfaces;
    for (const auto& m : mentions) {
        if (m.kind == MentionKind::entity) {
            surfaces.push_back(m.surface);
        } else {
            surfaces.push_back(m.head);
            surfaces.push_back(m.tail);
        }
    }
    const auto clusters = cluster_synonyms(surfaces, observed);
    std::unordered_map<std::string, std::size_t> cluster_of;
    for (std::size_t i = 0; i < clusters.size(); ++i) {
        for (const auto& member : clusters[i].members) cluster_of.emplace(member, i);
    }

    std::vector<std::size_t> entity_counts(clusters.size(), 0);
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> relation_counts;
    for (const auto& m : mentions) {
        if (m.kind == MentionKind::entity) {
            ++entity_counts[cluster_of.at(m.surface)];
        } else {
            const auto child = cluster_of.at(m.head);
            const auto parent = cluster_of.at(m.tail);
            if (child != parent) ++relation_counts[{child, parent}];
        }
    }

    CandidateSets out;
    for (std::size_t i = 0; i < clusters.size(); ++i) {
        if (entity_counts[i] > 0 && thresholds.keeps_entity(entity_counts[i])) {
            out.entities.push_back({clusters[i], entity_counts[i]});
        }
    }
    for (const auto& [key, count] : relation_counts) {
        if (thresholds.keeps_relation(count)) {
            out.relations.push_back({clusters[key.first].canonical, clusters[key.second].canonical, count});
        }
    }
    std::sort(out.relations.begin(), out.relations.end(), [](const auto& a, const auto& b) {
        return std::tie(a.child, a.parent) < std::tie(b.child, b.parent);
    });
    return out;
}

}  // namespace nlpkg::ingest

#include "nlpkg/ingest/curation.hpp"

#include <algorithm>
#include <fstream>

#include "nlpkg/util/jsonl.hpp"

namespace nlpkg::ingest {

using nlohmann::json;

namespace {

CurationStatus parse_status(std::string_view s) {
    if (s == "pending") return CurationStatus::pending;
    if (s == "accepted") return CurationStatus::accepted;
    if (s == "corrected") return CurationStatus::corrected;
    if (s == "rejected") return CurationStatus::rejected;
    throw Error("unknown curation status '" + std::string(s) + "'");
}

json triple_json(const Triple& t) {
    return {{"child", t.child}, {"relation", t.relation}, {"parent", t.parent}};
}

Triple triple_from_json(const json& j) {
    Triple t{j.at("child").get<std::string>(), j.value("relation", "hyponym-of"),
             j.at("parent").get<std::string>()};
    if (t.relation != "hyponym-of") throw Error("only hyponym-of triples can be curated");
    return t;
}

// Resolves a surface (id, name or synonym) to a node id, creating an
// extended node when nothing matches.
std::string ensure_node(kg::FosGraph& g, const std::string& surface,
                        const std::vector<std::string>& synonyms = {}) {
    if (g.contains(surface)) return surface;
    if (const auto* n = g.find_by_name(surface)) {
        for (const auto& s : synonyms) g.add_synonym(n->id, s);
        return n->id;
    }
    kg::FieldOfStudy node;
    node.name = surface;
    node.synonyms = synonyms;
    node.tier = kg::Tier::extended;
    return g.add_fos(std::move(node));
}

std::string existing_node(const kg::FosGraph& g, const std::string& surface) {
    if (g.contains(surface)) return surface;
    if (const auto* n = g.find_by_name(surface)) return n->id;
    throw kg::UnknownId("no field of study named '" + surface + "'");
}

}  // namespace

std::string_view to_string(CurationStatus s) {
    switch (s) {
        case CurationStatus::pending: return "pending";
        case CurationStatus::accepted: return "accepted";
        case CurationStatus::corrected: return "corrected";
        case CurationStatus::rejected: return "rejected";
    }
    return "pending";
}

json to_json(const CurationItem& item) {
    json j{{"id", item.id},
           {"kind", item.kind == CurationItem::Kind::entity ? "entity" : "relation"},
           {"count", item.count},
           {"status", to_string(item.status)}};
    if (item.kind == CurationItem::Kind::entity) {
        j["entity"] = item.entity;
        j["synonyms"] = item.synonyms;
    }
    if (item.triple) j["triple"] = triple_json(*item.triple);
    if (item.correction) j["correction"] = triple_json(*item.correction);
    if (item.parent) j["parent"] = *item.parent;
    if (item.reason) j["reason"] = *item.reason;
    return j;
}

CurationItem curation_item_from_json(const json& j) {
    CurationItem item;
    item.id = j.at("id").get<std::string>();
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "entity") {
        item.kind = CurationItem::Kind::entity;
        item.entity = j.at("entity").get<std::string>();
        item.synonyms = j.value("synonyms", std::vector<std::string>{});
    } else if (kind == "relation") {
        item.kind = CurationItem::Kind::relation;
        item.triple = triple_from_json(j.at("triple"));
    } else {
        throw Error("unknown curation item kind '" + kind + "'");
    }
    item.count = j.value("count", std::size_t{0});
    item.status = parse_status(j.value("status", "pending"));
    if (auto it = j.find("correction"); it != j.end() && !it->is_null()) item.correction = triple_from_json(*it);
    if (auto it = j.find("parent"); it != j.end() && !it->is_null()) item.parent = it->get<std::string>();
    if (auto it = j.find("reason"); it != j.end() && !it->is_null()) item.reason = it->get<std::string>();
    if (item.status == CurationStatus::corrected && !item.correction) {
        throw Error("corrected item '" + item.id + "' carries no correction");
    }
    return item;
}

std::vector<CurationItem> curation_queue(const CandidateSets& candidates) {
    std::vector<EntityCandidate> entities = candidates.entities;
    std::stable_sort(entities.begin(), entities.end(), [](const auto& a, const auto& b) {
        if (a.count != b.count) return a.count > b.count;
        return a.cluster.canonical < b.cluster.canonical;
    });
    std::vector<RelationCandidate> relations = candidates.relations;
    std::stable_sort(relations.begin(), relations.end(), [](const auto& a, const auto& b) {
        if (a.count != b.count) return a.count > b.count;
        return std::tie(a.child, a.parent) < std::tie(b.child, b.parent);
    });

    std::vector<CurationItem> out;
    auto make_id = [](char prefix, std::size_t n) {
        std::string digits = std::to_string(n);
        return std::string(1, prefix) + std::string(digits.size() < 5 ? 5 - digits.size() : 0, '0') + digits;
    };
    for (std::size_t i = 0; i < entities.size(); ++i) {
        CurationItem item;
        item.id = make_id('e', i + 1);
        item.kind = CurationItem::Kind::entity;
        item.entity = entities[i].cluster.canonical;
        for (const auto& m : entities[i].cluster.members) {
            if (m != item.entity) item.synonyms.push_back(m);
        }
        item.count = entities[i].count;
        out.push_back(std::move(item));
    }
    for (std::size_t i = 0; i < relations.size(); ++i) {
        CurationItem item;
        item.id = make_id('r', i + 1);
        item.kind = CurationItem::Kind::relation;
        item.triple = Triple{relations[i].child, "hyponym-of", relations[i].parent};
        item.count = relations[i].count;
        out.push_back(std::move(item));
    }
    return out;
}

std::vector<CurationItem> load_queue(const std::filesystem::path& path) {
    std::vector<CurationItem> out;
    jsonl::for_each(path, [&](const json& j, std::size_t line) {
        try {
            out.push_back(curation_item_from_json(j));
        } catch (const Error& e) {
            throw ParseError(path.string(), line, e.what());
        }
    });
    return out;
}

void save_queue(const std::vector<CurationItem>& items, const std::filesystem::path& path) {
    std::vector<json> out;
    out.reserve(items.size());
    for (const auto& i : items) out.push_back(to_json(i));
    jsonl::write_atomic(path, out);
}

void CurationLog::record(const CurationItem& item) const {
    std::ofstream out(path_, std::ios::app);
    if (!out) throw IoError("cannot append to " + path_.string());
    out << to_json(item).dump() << '\n';
}

CurationItem resolve(const CurationItem& item, const Decision& decision, kg::FosGraph& graph,
                     const CurationLog* log) {
    CurationItem next = item;
    if (decision.action == Decision::Action::reject) {
        next.status = CurationStatus::rejected;
        next.reason = decision.reason.empty() ? std::string("rejected by curator") : decision.reason;
        if (log) log->record(next);
        return next;
    }

    Triple to_insert;
    std::vector<std::string> child_synonyms;
    if (decision.action == Decision::Action::correct) {
        if (!decision.correction) throw CurationError("a correction needs a replacement triple");
        to_insert = *decision.correction;
        next.status = CurationStatus::corrected;
        next.correction = decision.correction;
    } else if (item.kind == CurationItem::Kind::relation) {
        to_insert = *item.triple;
        next.status = CurationStatus::accepted;
    } else {
        if (!decision.parent) {
            throw CurationError("accepting entity '" + item.entity + "' needs a parent field of study");
        }
        to_insert = Triple{item.entity, "hyponym-of", *decision.parent};
        child_synonyms = item.synonyms;
        next.status = CurationStatus::accepted;
    }
    if (to_insert.relation != "hyponym-of") throw CurationError("only hyponym-of triples can be inserted");

    // Work on a copy so a failure leaves the caller's graph untouched.
    kg::FosGraph staged = graph;
    std::string parent_id;
    if (item.kind == CurationItem::Kind::entity && decision.action == Decision::Action::accept) {
        parent_id = existing_node(staged, to_insert.parent);
    } else {
        parent_id = ensure_node(staged, to_insert.parent);
    }
    const std::string child_id = ensure_node(staged, to_insert.child, child_synonyms);
    staged.add_hyponym(child_id, parent_id);

    graph = std::move(staged);
    if (item.kind == CurationItem::Kind::entity) next.parent = parent_id;
    next.reason.reset();
    if (log) log->record(next);
    return next;
}

}  // namespace nlpkg::ingest

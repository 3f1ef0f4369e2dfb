#include "nlpkg/kg/snapshot.hpp"

#include "nlpkg/util/jsonl.hpp"

namespace nlpkg::kg {

using nlohmann::json;

json to_json(const FieldOfStudy& f) {
    json j{{"id", f.id}, {"name", f.name}, {"synonyms", f.synonyms}, {"tier", to_string(f.tier)}};
    if (f.description) j["description"] = *f.description;
    return j;
}

FieldOfStudy fos_from_json(const json& j) {
    FieldOfStudy f;
    f.id = j.at("id").get<std::string>();
    f.name = j.at("name").get<std::string>();
    f.synonyms = j.value("synonyms", std::vector<std::string>{});
    if (auto it = j.find("description"); it != j.end() && !it->is_null()) {
        f.description = it->get<std::string>();
    }
    f.tier = parse_tier(j.value("tier", "extended"));
    return f;
}

FosGraph load_fos_graph(const std::filesystem::path& nodes, const std::filesystem::path& edges,
                        bool require_rooted) {
    FosGraph g;
    auto wrap = [](const std::filesystem::path& p, std::size_t line, auto&& fn) {
        try {
            fn();
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(p.string(), line, e.what());
        }
    };
    jsonl::for_each(nodes, [&](const json& j, std::size_t line) {
        wrap(nodes, line, [&] { g.add_fos(fos_from_json(j)); });
    });
    if (std::filesystem::exists(edges)) {
        jsonl::for_each(edges, [&](const json& j, std::size_t line) {
            wrap(edges, line, [&] {
                g.add_hyponym(j.at("child").get<std::string>(), j.at("parent").get<std::string>());
            });
        });
    }
    if (require_rooted) {
        if (auto orphans = g.unrooted(); !orphans.empty()) {
            throw InvariantViolation(std::to_string(orphans.size()) +
                                     " fields of study are not reachable from a first-level node, e.g. '" +
                                     orphans.front() + "'");
        }
    }
    return g;
}

void save_fos_graph(const FosGraph& g, const std::filesystem::path& nodes,
                    const std::filesystem::path& edges) {
    std::vector<json> n;
    for (const auto& id : g.ids()) n.push_back(to_json(g.node(id)));
    std::vector<json> e;
    for (const auto& edge : g.edges()) e.push_back({{"child", edge.child}, {"parent", edge.parent}});
    jsonl::write_atomic(nodes, n);
    jsonl::write_atomic(edges, e);
}

Corpus load_publications(const std::filesystem::path& path, CorpusLoadReport* report) {
    Corpus c(path.has_parent_path() ? path.parent_path() : std::filesystem::path("."));
    CorpusLoadReport local;
    jsonl::for_each(path, [&](const json& j, std::size_t line) {
        Publication p;
        try {
            p = publication_from_json(j);
        } catch (const Error& e) {
            throw ParseError(path.string(), line, e.what());
        }
        const std::string id = p.id;
        try {
            if (!c.add(std::move(p))) local.duplicates.push_back({id, line});
        } catch (const Error& e) {
            throw ParseError(path.string(), line, e.what());
        }
    });
    local.loaded = c.size();
    if (report) *report = std::move(local);
    return c;
}

void save_publications(const Corpus& c, const std::filesystem::path& path) {
    std::vector<json> out;
    out.reserve(c.size());
    for (const auto& p : c.publications()) out.push_back(to_json(p));
    jsonl::write_atomic(path, out);
}

std::size_t attach_embeddings(Corpus& c, const std::filesystem::path& path) {
    std::size_t n = 0;
    jsonl::for_each(path, [&](const json& j, std::size_t line) {
        const auto id = j.at("pub_id").get<std::string>();
        try {
            c.set_embedding(id, j.at("vector").get<std::vector<float>>());
        } catch (const Error& e) {
            throw ParseError(path.string(), line, e.what());
        }
        ++n;
    });
    return n;
}

void save_embeddings(const Corpus& c, const std::filesystem::path& path) {
    std::vector<json> out;
    for (const auto& p : c.publications()) {
        if (p.embedding) out.push_back({{"pub_id", p.id}, {"vector", *p.embedding}});
    }
    jsonl::write_atomic(path, out);
}

KnowledgeGraph load_knowledge_graph(const DataPaths& paths) {
    KnowledgeGraph kg;
    kg.fos = load_fos_graph(paths.fos_nodes(), paths.fos_edges());
    kg.corpus = load_publications(paths.publications());
    if (std::filesystem::exists(paths.embeddings())) {
        attach_embeddings(kg.corpus, paths.embeddings());
    }
    return kg;
}

void save_knowledge_graph(const KnowledgeGraph& kg, const DataPaths& paths) {
    save_fos_graph(kg.fos, paths.fos_nodes(), paths.fos_edges());
    save_publications(kg.corpus, paths.publications());
    if (kg.corpus.embedding_dim() > 0) save_embeddings(kg.corpus, paths.embeddings());
}

}  // namespace nlpkg::kg

#include "nlpkg/classify/fos_classifier.hpp"

#include <algorithm>
#include <set>

#include "nlpkg/text/analyzer.hpp"
#include "nlpkg/util/jsonl.hpp"

namespace nlpkg::classify {

namespace {

bool contains_run(const std::vector<std::string>& hay, const std::vector<std::string>& needle) {
    if (needle.empty() || needle.size() > hay.size()) return false;
    return std::search(hay.begin(), hay.end(), needle.begin(), needle.end()) != hay.end();
}

}  // namespace

FosLexicon build_lexicon(const kg::FosGraph& graph, bool extended_only) {
    FosLexicon lex;
    for (const auto& id : graph.ids()) {
        const auto& node = graph.node(id);
        if (extended_only && node.tier != kg::Tier::extended) continue;
        FosLexicon::Entry e{node.id, node.tier, {}};
        std::set<std::vector<std::string>> seen;
        auto add = [&](const std::string& surface) {
            auto seq = text::analyze(surface);
            if (!seq.empty() && seen.insert(seq).second) e.sequences.push_back(std::move(seq));
        };
        add(node.name);
        for (const auto& s : node.synonyms) add(s);
        if (!e.sequences.empty()) lex.entries.push_back(std::move(e));
    }
    return lex;
}

ExternalLabels load_external_labels(const std::filesystem::path& path) {
    ExternalLabels labels;
    jsonl::for_each(path, [&](const nlohmann::json& j, std::size_t) {
        auto& ids = labels[j.at("pub_id").get<std::string>()];
        for (const auto& id : j.at("fos_ids")) ids.push_back(id.get<std::string>());
    });
    return labels;
}

std::vector<std::string> classify_fos_step1(const kg::Publication& pub, const ExternalLabels& labels,
                                            const kg::FosGraph& graph) {
    auto it = labels.find(pub.id);
    if (it == labels.end()) return {};
    std::vector<std::string> out;
    for (const auto& id : it->second) {
        const auto* node = graph.find(id);
        if (!node) throw UnknownFos("label for '" + pub.id + "' names unknown field of study '" + id + "'");
        if (node->tier != kg::Tier::top_level) {
            throw UnknownFos("label for '" + pub.id + "' names '" + id + "', which is not a top-level field");
        }
        out.push_back(id);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::string> classify_fos_step2(const kg::Publication& pub, const FosLexicon& lexicon) {
    const auto title = text::analyze(pub.title);
    std::vector<std::string> out;
    for (const auto& e : lexicon.entries) {
        for (const auto& seq : e.sequences) {
            if (contains_run(title, seq)) {
                out.push_back(e.fos_id);
                break;
            }
        }
    }
    return out;  // lexicon entries are sorted by id
}

ClassificationReport classify_corpus(kg::Corpus& corpus, const kg::FosGraph& graph,
                                     const ExternalLabels& labels) {
    const auto lexicon = build_lexicon(graph);
    ClassificationReport r;
    for (auto& pub : corpus.publications_mutable()) {
        std::set<std::string> ids;
        for (auto& id : classify_fos_step1(pub, labels, graph)) ids.insert(std::move(id));
        for (auto& id : classify_fos_step2(pub, lexicon)) ids.insert(std::move(id));
        std::vector<std::string> next(ids.begin(), ids.end());
        ++r.publications;
        if (next != pub.fos_ids) {
            ++r.changed;
            pub.fos_ids = std::move(next);
        }
        if (!pub.fos_ids.empty()) ++r.labelled;
    }
    return r;
}

}  // namespace nlpkg::classify

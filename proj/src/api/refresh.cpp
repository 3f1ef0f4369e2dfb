#include "nlpkg/api/refresh.hpp"

#include <set>

#include "nlpkg/classify/fos_classifier.hpp"
#include "nlpkg/classify/survey_model.hpp"
#include "nlpkg/ingest/corpus_loader.hpp"
#include "nlpkg/kg/snapshot.hpp"
#include "nlpkg/search/embedder.hpp"
#include "nlpkg/util/jsonl.hpp"

namespace nlpkg::api {

namespace fs = std::filesystem;

namespace {

std::string file_safe(const std::string& id) {
    std::string out;
    for (char c : id) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '-' || c == '_' || c == '.';
        out.push_back(ok ? c : '_');
    }
    return out;
}

}  // namespace

RefreshReport refresh(const RefreshOptions& opts) {
    const kg::DataPaths paths{opts.data_dir};
    auto kg = kg::load_knowledge_graph(paths);
    auto incoming = ingest::load_corpus(opts.incoming).corpus;

    RefreshReport r;
    std::set<std::string> touched;
    for (auto& p : incoming.publications_mutable()) {
        const bool known = kg.corpus.contains(p.id);
        if (known && !opts.overwrite) continue;
        touched.insert(p.id);
        if (p.fulltext) {
            const fs::path src = incoming.base_dir() / *p.fulltext;
            if (fs::exists(src)) {
                const fs::path rel = fs::path("fulltext") / (file_safe(p.id) + ".txt");
                fs::create_directories(opts.data_dir / "fulltext");
                fs::copy_file(src, opts.data_dir / rel, fs::copy_options::overwrite_existing);
                p.fulltext = rel.generic_string();
                ++r.fulltexts_copied;
            } else {
                p.fulltext.reset();
            }
        }
    }
    const auto merged = ingest::merge_corpus(kg.corpus, incoming, opts.overwrite);
    r.added = merged.added;
    r.updated = merged.updated;

    classify::ExternalLabels labels;
    if (opts.external_labels) labels = classify::load_external_labels(*opts.external_labels);
    r.reclassified = classify::classify_corpus(kg.corpus, kg.fos, labels).changed;

    std::unique_ptr<classify::SurveyClassifier> survey;
    if (opts.survey_model) {
        survey = std::make_unique<classify::LogisticSurveyClassifier>(
            classify::LogisticSurveyClassifier::from_json(nlohmann::json::parse(jsonl::read_text(*opts.survey_model))));
    } else {
        survey = std::make_unique<classify::KeywordSurveyClassifier>();
    }
    for (const auto& id : touched) {
        auto* p = kg.corpus.find_mutable(id);
        if (!p) continue;
        p->is_survey = survey->classify(*p).label;
        r.surveys += p->is_survey ? 1 : 0;
    }

    const std::size_t dim = kg.corpus.embedding_dim() ? kg.corpus.embedding_dim() : opts.embedding_dim;
    const search::HashingEmbedder embedder(dim);
    std::vector<std::string> missing;
    for (const auto& p : kg.corpus.publications()) {
        if (!p.embedding) missing.push_back(p.id);
    }
    for (const auto& id : missing) {
        kg.corpus.set_embedding(id, search::embed_publication(embedder, *kg.corpus.find(id)));
        ++r.embedded;
    }
    kg::save_knowledge_graph(kg, paths);
    return r;
}

}  // namespace nlpkg::api

#include "nlpkg/ingest/corpus_loader.hpp"

namespace nlpkg::ingest {

LoadedCorpus load_corpus(const std::filesystem::path& path) {
    LoadedCorpus out;
    out.corpus = kg::load_publications(path, &out.report);
    return out;
}

MergeReport merge_corpus(kg::Corpus& into, const kg::Corpus& incoming, bool overwrite) {
    MergeReport r;
    for (const auto& p : incoming.publications()) {
        const auto* existing = into.find(p.id);
        if (!existing) {
            into.add(p);
            ++r.added;
        } else if (overwrite) {
            auto next = p;
            if (next.fos_ids.empty()) next.fos_ids = existing->fos_ids;
            if (!next.embedding) next.embedding = existing->embedding;
            next.is_survey = next.is_survey || existing->is_survey;
            into.upsert(std::move(next));
            ++r.updated;
        }
    }
    return r;
}

}  // namespace nlpkg::ingest

#include "nlpkg/kg/corpus.hpp"

#include <algorithm>

#include "nlpkg/util/jsonl.hpp"

namespace nlpkg::kg {

using nlohmann::json;

json to_json(const Publication& p, bool with_embedding) {
    json j{
        {"id", p.id},
        {"title", p.title},
        {"abstract", p.abstract},
        {"year", p.year},
        {"venue", p.venue},
        {"authors", p.authors},
        {"citation_count", p.citation_count},
        {"cited_ids", p.cited_ids},
        {"fos_ids", p.fos_ids},
        {"is_survey", p.is_survey},
    };
    if (p.tldr) j["tldr"] = *p.tldr;
    if (p.fulltext) j["fulltext"] = *p.fulltext;
    if (with_embedding && p.embedding) j["embedding"] = *p.embedding;
    return j;
}

Publication publication_from_json(const json& j) {
    Publication p;
    p.id = j.at("id").get<std::string>();
    if (p.id.empty()) throw Error("publication id must be non-empty");
    p.title = j.value("title", "");
    p.abstract = j.value("abstract", "");
    p.year = j.value("year", 0);
    p.venue = j.value("venue", "");
    p.authors = j.value("authors", std::vector<std::string>{});
    p.citation_count = j.value("citation_count", std::int64_t{0});
    if (p.citation_count < 0) throw Error("citation_count must be >= 0 for '" + p.id + "'");
    p.cited_ids = j.value("cited_ids", std::vector<std::string>{});
    if (auto it = j.find("tldr"); it != j.end() && !it->is_null()) p.tldr = it->get<std::string>();
    if (auto it = j.find("fulltext"); it != j.end() && !it->is_null()) p.fulltext = it->get<std::string>();
    p.fos_ids = j.value("fos_ids", std::vector<std::string>{});
    std::sort(p.fos_ids.begin(), p.fos_ids.end());
    p.fos_ids.erase(std::unique(p.fos_ids.begin(), p.fos_ids.end()), p.fos_ids.end());
    p.is_survey = j.value("is_survey", false);
    if (auto it = j.find("embedding"); it != j.end() && !it->is_null()) {
        p.embedding = it->get<std::vector<float>>();
    }
    return p;
}

void Corpus::check_dim(const std::vector<float>& v, std::string_view id) {
    if (v.empty()) throw DimensionMismatch("empty embedding for '" + std::string(id) + "'");
    if (dim_ != 0 && v.size() != dim_) {
        throw DimensionMismatch("embedding for '" + std::string(id) + "' has dimension " +
                                std::to_string(v.size()) + ", corpus uses " + std::to_string(dim_));
    }
}

bool Corpus::add(Publication p) {
    if (by_id_.count(p.id)) return false;
    if (p.embedding) {
        check_dim(*p.embedding, p.id);
        dim_ = p.embedding->size();
    }
    by_id_.emplace(p.id, pubs_.size());
    pubs_.push_back(std::move(p));
    return true;
}

void Corpus::upsert(Publication p) {
    if (auto it = by_id_.find(p.id); it != by_id_.end()) {
        if (p.embedding) {
            check_dim(*p.embedding, p.id);
            dim_ = p.embedding->size();
        }
        pubs_[it->second] = std::move(p);
        return;
    }
    add(std::move(p));
}

void Corpus::set_embedding(std::string_view id, std::vector<float> v) {
    auto* p = find_mutable(id);
    if (!p) throw Error("embedding for unknown publication '" + std::string(id) + "'");
    check_dim(v, id);
    dim_ = v.size();
    p->embedding = std::move(v);
}

const Publication* Corpus::find(std::string_view id) const {
    auto it = by_id_.find(std::string(id));
    return it == by_id_.end() ? nullptr : &pubs_[it->second];
}

Publication* Corpus::find_mutable(std::string_view id) {
    auto it = by_id_.find(std::string(id));
    return it == by_id_.end() ? nullptr : &pubs_[it->second];
}

bool Corpus::has_fulltext(const Publication& p) const {
    return p.fulltext && std::filesystem::is_regular_file(base_dir_ / *p.fulltext);
}

std::optional<std::string> Corpus::read_fulltext(const Publication& p) const {
    if (!has_fulltext(p)) return std::nullopt;
    return jsonl::read_text(base_dir_ / *p.fulltext);
}

}  // namespace nlpkg::kg

#include "nlpkg/search/config.hpp"

#include "nlpkg/search/ranked_list.hpp"
#include "nlpkg/util/jsonl.hpp"

#include <algorithm>

namespace nlpkg::search {

std::string_view to_string(Source s) {
    switch (s) {
        case Source::sparse: return "sparse";
        case Source::dense: return "dense";
        case Source::fused: return "fused";
        case Source::reranked: return "reranked";
    }
    return "sparse";
}

std::vector<std::string> RankedList::ids() const {
    std::vector<std::string> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(e.id);
    return out;
}

void sort_ranked(std::vector<RankedEntry>& entries) {
    std::sort(entries.begin(), entries.end(), [](const RankedEntry& a, const RankedEntry& b) {
        if (a.score != b.score) return a.score > b.score;
        return a.id < b.id;
    });
}

void SearchConfig::validate() const {
    if (!(alpha >= 0.0 && alpha <= 1.0)) throw InvalidConfig("alpha must lie in [0, 1]");
    if (rrf_k < 1) throw InvalidConfig("rrf_k must be >= 1");
    if (page_size < 1) throw InvalidConfig("page_size must be >= 1");
    if (rerank_top_k < page_size) throw InvalidConfig("rerank_top_k must be >= page_size");
    if (bm25_k1 < 0.0 || bm25_b < 0.0 || bm25_b > 1.0) throw InvalidConfig("bm25 needs k1 >= 0 and b in [0, 1]");
}

SearchConfig search_config_from_json(const nlohmann::json& j) {
    SearchConfig c;
    c.alpha = j.value("alpha", c.alpha);
    c.rrf_k = j.value("rrf_k", c.rrf_k);
    c.rerank_top_k = j.value("rerank_top_k", c.rerank_top_k);
    c.page_size = j.value("page_size", c.page_size);
    if (auto it = j.find("bm25"); it != j.end()) {
        c.bm25_k1 = it->value("k1", c.bm25_k1);
        c.bm25_b = it->value("b", c.bm25_b);
    }
    if (auto it = j.find("rerank_weights"); it != j.end()) {
        c.rerank.relevance = it->value("relevance", c.rerank.relevance);
        c.rerank.citations = it->value("citations", c.rerank.citations);
        c.rerank.recency = it->value("recency", c.rerank.recency);
    }
    c.dense_min_similarity = j.value("dense_min_similarity", c.dense_min_similarity);
    c.validate();
    return c;
}

nlohmann::json to_json(const SearchConfig& c) {
    return {{"alpha", c.alpha},
            {"rrf_k", c.rrf_k},
            {"rerank_top_k", c.rerank_top_k},
            {"page_size", c.page_size},
            {"bm25", {{"k1", c.bm25_k1}, {"b", c.bm25_b}}},
            {"rerank_weights",
             {{"relevance", c.rerank.relevance}, {"citations", c.rerank.citations}, {"recency", c.rerank.recency}}},
            {"dense_min_similarity", c.dense_min_similarity}};
}

SearchConfig load_search_config(const std::filesystem::path& path) {
    return search_config_from_json(nlohmann::json::parse(jsonl::read_text(path)));
}

}  // namespace nlpkg::search

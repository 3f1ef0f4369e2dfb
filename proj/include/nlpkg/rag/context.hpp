#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "nlpkg/kg/corpus.hpp"
#include "nlpkg/rag/fulltext.hpp"

namespace nlpkg::rag {

struct ContextBudget {
    std::size_t per_doc_chars = 24000;
    std::size_t max_docs = 5;
};

// Longest prefix of whole paragraphs (joined by blank lines) that fits in
// `budget` characters; if even the first paragraph is too long, its longest
// prefix of whole sentences. Never cuts inside a sentence.
std::string truncate_text(const std::vector<std::string>& paragraphs, std::size_t budget, bool* truncated = nullptr);

struct ContextDoc {
    std::size_t index = 0;  // 1-based marker number
    std::string pub_id;
    std::string header;
    std::string body;
    bool truncated = false;
};

// Body comes from the full text when available, else from TLDR and abstract.
ContextDoc make_context_doc(std::size_t index, const kg::Publication& pub, const kg::Corpus& corpus,
                            std::size_t budget);

std::string render_context(const std::vector<ContextDoc>& docs);

// Paragraphs tagged with their section and page, for per-paper questions.
std::string render_paper_context(const FullText& ft, std::size_t budget, bool* truncated = nullptr);

}  // namespace nlpkg::rag

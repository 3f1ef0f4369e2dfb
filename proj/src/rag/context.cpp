#include "nlpkg/rag/context.hpp"

namespace nlpkg::rag {

std::string truncate_text(const std::vector<std::string>& paragraphs, std::size_t budget, bool* truncated) {
    std::string out;
    std::size_t used = 0;
    for (; used < paragraphs.size(); ++used) {
        const auto& p = paragraphs[used];
        const std::size_t extra = (out.empty() ? 0 : 2) + p.size();
        if (out.size() + extra > budget) break;
        if (!out.empty()) out += "\n\n";
        out += p;
    }
    if (used == 0 && !paragraphs.empty()) {
        for (const auto& s : split_sentences(paragraphs.front())) {
            const std::size_t extra = (out.empty() ? 0 : 1) + s.size();
            if (out.size() + extra > budget) break;
            if (!out.empty()) out += ' ';
            out += s;
        }
    }
    if (truncated) *truncated = used < paragraphs.size();
    return out;
}

ContextDoc make_context_doc(std::size_t index, const kg::Publication& pub, const kg::Corpus& corpus,
                            std::size_t budget) {
    ContextDoc d;
    d.index = index;
    d.pub_id = pub.id;
    d.header = "[" + std::to_string(index) + "] " + pub.title;
    if (pub.year) d.header += " (" + std::to_string(pub.year) + ")";
    if (!pub.venue.empty()) d.header += ", " + pub.venue;

    std::vector<std::string> paragraphs;
    if (auto raw = corpus.read_fulltext(pub)) {
        for (auto& p : parse_fulltext(*raw).paragraphs) paragraphs.push_back(std::move(p.text));
    } else {
        if (pub.tldr) paragraphs.push_back("TLDR: " + *pub.tldr);
        if (!pub.abstract.empty()) paragraphs.push_back(pub.abstract);
    }
    d.body = truncate_text(paragraphs, budget, &d.truncated);
    return d;
}

std::string render_context(const std::vector<ContextDoc>& docs) {
    std::string out;
    for (const auto& d : docs) {
        if (!out.empty()) out += "\n\n";
        out += d.header + "\n" + d.body;
    }
    return out;
}

std::string render_paper_context(const FullText& ft, std::size_t budget, bool* truncated) {
    std::vector<std::string> tagged;
    tagged.reserve(ft.paragraphs.size());
    for (const auto& p : ft.paragraphs) {
        tagged.push_back("(Section: " + (p.section.empty() ? std::string("-") : p.section) +
                         ", Page: " + std::to_string(p.page) + ") " + p.text);
    }
    return truncate_text(tagged, budget, truncated);
}

}  // namespace nlpkg::rag

#include "nlpkg/rag/ask_paper.hpp"

#include <cctype>
#include <set>
#include <stdexcept>

#include "nlpkg/rag/context.hpp"
#include "nlpkg/rag/prompts.hpp"
#include "nlpkg/text/normalize.hpp"

namespace nlpkg::rag {

namespace {

bool starts_with_tag(std::string_view line, std::string_view tag, std::string_view& rest) {
    if (line.size() < tag.size()) return false;
    for (std::size_t i = 0; i < tag.size(); ++i) {
        if (std::toupper(static_cast<unsigned char>(line[i])) != tag[i]) return false;
    }
    rest = line.substr(tag.size());
    return true;
}

SupportStatement parse_support(const std::string& line) {
    const auto open = line.rfind('(');
    const auto close = line.rfind(')');
    if (open == std::string::npos || close == std::string::npos || close < open) {
        throw ReplyFormatError("supporting statement without a section and page reference: '" + line + "'");
    }
    const auto ref = line.substr(open + 1, close - open - 1);
    const auto lower = text::fold(ref);
    const auto s = lower.find("section:");
    const auto p = lower.find("page:");
    if (s == std::string::npos || p == std::string::npos || p < s) {
        throw ReplyFormatError("reference must read (Section: <name>, Page: <n>): '" + ref + "'");
    }
    SupportStatement st;
    st.text = text::trim(line.substr(0, open));
    auto section = text::trim(ref.substr(s + 8, p - s - 8));
    while (!section.empty() && (section.back() == ',' || section.back() == ';')) section.pop_back();
    st.section = text::trim(section);
    const auto page = text::trim(ref.substr(p + 5));
    try {
        std::size_t used = 0;
        st.page = std::stoi(page, &used);
        if (used != page.size()) throw std::invalid_argument(page);
    } catch (const std::exception&) {
        throw ReplyFormatError("page is not a number: '" + page + "'");
    }
    if (st.text.empty()) throw ReplyFormatError("empty supporting statement");
    return st;
}

}  // namespace

const std::array<std::string, 3>& predefined_questions() {
    static const std::array<std::string, 3> q{"What is the main contribution?", "What methods are used?",
                                              "What are the key results?"};
    return q;
}

const std::string& predefined_question(int id) {
    if (id < 1 || id > 3) throw UnknownQuestion("predefined question ids are 1, 2 and 3");
    return predefined_questions()[static_cast<std::size_t>(id - 1)];
}

GroundedAnswer parse_paper_reply(std::string_view reply, const FullText& ft) {
    GroundedAnswer a;
    enum { none, answer, support, followup } field = none;
    std::string* last = nullptr;
    std::size_t pos = 0;
    while (pos <= reply.size()) {
        auto nl = reply.find('\n', pos);
        const auto line = text::trim(reply.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos));
        pos = nl == std::string_view::npos ? reply.size() + 1 : nl + 1;
        std::string_view rest;
        if (starts_with_tag(line, "ANSWER:", rest)) {
            if (field != none) throw ReplyFormatError("ANSWER must come first and only once");
            field = answer;
            a.text = text::trim(rest);
            last = &a.text;
        } else if (starts_with_tag(line, "SUPPORT:", rest)) {
            if (field == none || field == followup) throw ReplyFormatError("SUPPORT out of place");
            field = support;
            a.support.push_back({text::trim(rest), "", 0});
            last = &a.support.back().text;
        } else if (starts_with_tag(line, "FOLLOWUP:", rest)) {
            if (field == none) throw ReplyFormatError("FOLLOWUP before ANSWER");
            field = followup;
            a.followups.push_back(text::trim(rest));
            last = &a.followups.back();
        } else if (!line.empty()) {
            if (!last) throw ReplyFormatError("reply does not start with ANSWER:");
            *last += (last->empty() ? "" : (field == answer ? "\n" : " ")) + line;
        }
    }
    if (a.text.empty()) throw ReplyFormatError("reply has no answer");
    for (auto& s : a.support) {
        s = parse_support(s.text);
        if (s.page < 1 || s.page > ft.pages) {
            throw ReplyFormatError("page " + std::to_string(s.page) + " outside the publication's " +
                                   std::to_string(ft.pages) + " pages");
        }
    }
    if (a.followups.size() != 3) {
        throw ReplyFormatError("expected exactly 3 follow-up questions, got " + std::to_string(a.followups.size()));
    }
    std::set<std::string> distinct;
    for (const auto& f : a.followups) {
        if (f.empty()) throw ReplyFormatError("empty follow-up question");
        distinct.insert(text::normalize_name(f));
    }
    if (distinct.size() != 3) throw ReplyFormatError("follow-up questions must be pairwise distinct");
    return a;
}

GroundedAnswer ask_paper(const kg::Corpus& corpus, const kg::Publication& pub, const std::string& question,
                         const LlmProvider& provider, const AskOptions& opts) {
    if (text::trim(question).empty()) throw UnknownQuestion("empty question");
    const auto raw = corpus.read_fulltext(pub);
    if (!raw) throw NoFullText("publication '" + pub.id + "' has no full text");
    const auto ft = parse_fulltext(*raw);
    auto messages = prompts::ask_paper(pub.title, render_paper_context(ft, opts.budget_chars), question);
    auto reply = provider.complete(messages, opts.sampling);
    try {
        return parse_paper_reply(reply, ft);
    } catch (const ReplyFormatError& e) {
        messages.push_back({"assistant", reply});
        messages.push_back(prompts::correction(std::string(e.what()) + "."));
        return parse_paper_reply(provider.complete(messages, opts.sampling), ft);
    }
}

}  // namespace nlpkg::rag

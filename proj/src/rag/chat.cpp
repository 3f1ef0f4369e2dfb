#include "nlpkg/rag/chat.hpp"

#include <cctype>
#include <set>

#include "nlpkg/rag/prompts.hpp"
#include "nlpkg/text/normalize.hpp"

namespace nlpkg::rag {

std::string_view to_string(Route r) { return r == Route::reuse_context ? "reuse_context" : "new_search"; }

Route parse_route(std::string_view reply) {
    std::string word;
    for (char c : reply) {
        if (std::isalpha(static_cast<unsigned char>(c))) word.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
        else if (!word.empty()) break;
    }
    const auto rest = text::trim(reply);
    // the reply must be the single word, possibly with punctuation
    std::size_t letters = 0;
    for (char c : rest) letters += std::isalpha(static_cast<unsigned char>(c)) ? 1 : 0;
    if (letters != word.size()) return Route::new_search;
    return word == "REUSE" ? Route::reuse_context : Route::new_search;
}

std::vector<std::string> parse_terms(std::string_view reply, std::size_t max_terms) {
    std::vector<std::string> out;
    std::set<std::string> seen;
    std::size_t pos = 0;
    while (pos <= reply.size() && out.size() < max_terms) {
        auto nl = reply.find('\n', pos);
        auto line = text::trim(reply.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos));
        pos = nl == std::string_view::npos ? reply.size() + 1 : nl + 1;

        std::size_t i = 0;
        while (i < line.size() && (line[i] == '-' || line[i] == '*' || line[i] == ' ' || std::isdigit(static_cast<unsigned char>(line[i])))) {
            ++i;
            if (i < line.size() && (line[i] == '.' || line[i] == ')') && std::isdigit(static_cast<unsigned char>(line[i - 1]))) ++i;
        }
        // a term that is just a number keeps its digits
        if (i == line.size()) i = 0;
        auto term = text::trim(std::string_view(line).substr(i));
        while (term.size() >= 2 && (term.front() == '"' || term.front() == '\'') && term.back() == term.front()) {
            term = text::trim(std::string_view(term).substr(1, term.size() - 2));
        }
        if (term.empty()) continue;
        if (seen.insert(text::normalize_name(term)).second) out.push_back(term);
    }
    return out;
}

ChatEngine::ChatEngine(const search::SearchEngine& search, const LlmProvider& provider, ChatOptions opts)
    : search_(search), provider_(provider), opts_(opts) {}

std::vector<std::string> ChatEngine::generate_search_terms(const std::string& query,
                                                           const std::vector<std::string>& history) const {
    if (text::trim(query).empty()) throw search::EmptyQuery("empty chat message");
    const auto reply = provider_.complete(prompts::search_terms(query, history, opts_.max_terms), opts_.sampling);
    auto terms = parse_terms(reply, opts_.max_terms);
    if (terms.empty()) terms.push_back(query);
    return terms;
}

std::vector<std::string> ChatEngine::retrieve(const std::vector<std::string>& terms) const {
    std::string q;
    for (const auto& t : terms) q += (q.empty() ? "" : " ") + t;
    const auto ranked = search_.retrieve(q);
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < ranked.size() && i < opts_.budget.max_docs; ++i) ids.push_back(ranked.entries[i].id);
    return ids;
}

Route ChatEngine::route_followup(const std::string& query, const ChatSession& session) const {
    if (session.messages.empty() || session.rounds.empty()) return Route::new_search;
    std::vector<Message> history;
    for (const auto& m : session.messages) history.push_back({m.role, m.content});
    std::vector<std::string> titles;
    for (const auto& d : session.retrieved_docs()) {
        const auto* p = search_.corpus().find(d.pub_id);
        titles.push_back(p ? p->title : d.pub_id);
    }
    return parse_route(provider_.complete(prompts::route(query, history, titles), opts_.sampling));
}

ChatTurn ChatEngine::conversational_answer(const std::string& query, ChatSession& session,
                                           const std::string& at) const {
    if (text::trim(query).empty()) throw search::EmptyQuery("empty chat message");
    ChatSession next = session;
    ChatTurn turn;
    turn.route = route_followup(query, session);

    if (turn.route == Route::new_search) {
        std::vector<std::string> history;
        for (const auto& m : session.messages) {
            if (m.role == "user") history.push_back(m.content);
        }
        turn.terms = generate_search_terms(query, history);
        std::vector<std::string> ids;
        try {
            ids = retrieve(turn.terms);
        } catch (const search::EmptyQuery&) {
            turn.terms = {query};
            ids = retrieve(turn.terms);
        }
        RetrievalRound round;
        round.terms = turn.terms;
        for (std::size_t i = 0; i < ids.size(); ++i) {
            const auto* pub = search_.corpus().find(ids[i]);
            auto doc = make_context_doc(i + 1, *pub, search_.corpus(), opts_.budget.per_doc_chars);
            round.docs.push_back({ids[i], doc.body});
        }
        next.rounds.push_back(std::move(round));
    }
    turn.round = next.rounds.size() - 1;

    const auto& docs = next.rounds.back().docs;
    std::vector<ContextDoc> ctx;
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < docs.size(); ++i) {
        const auto* pub = search_.corpus().find(docs[i].pub_id);
        ContextDoc d;
        d.index = i + 1;
        d.pub_id = docs[i].pub_id;
        d.header = "[" + std::to_string(i + 1) + "] " + (pub ? pub->title : docs[i].pub_id);
        if (pub && pub->year) d.header += " (" + std::to_string(pub->year) + ")";
        if (pub && !pub->venue.empty()) d.header += ", " + pub->venue;
        d.body = docs[i].slice;
        ctx.push_back(std::move(d));
        ids.push_back(docs[i].pub_id);
    }

    auto messages = prompts::grounded_answer(query, render_context(ctx), ids.size());
    auto reply = provider_.complete(messages, opts_.sampling);
    try {
        turn.answer = ground_answer(reply, ids);
    } catch (const UngroundedCitation& e) {
        messages.push_back({"assistant", reply});
        messages.push_back(prompts::correction(std::string(e.what()) + "."));
        turn.answer = ground_answer(provider_.complete(messages, opts_.sampling), ids);
    }
    turn.grounding = grounding_check(turn.answer, ids.size());

    if (!at.empty()) next.updated_at = at;
    next.messages.push_back({"user", query, {}, std::nullopt, at});
    next.messages.push_back({"assistant", turn.answer.text, turn.answer.citations, turn.round, at});
    session = std::move(next);
    return turn;
}

}  // namespace nlpkg::rag

#pragma once

#include <string>
#include <vector>

#include "nlpkg/rag/citations.hpp"
#include "nlpkg/rag/context.hpp"
#include "nlpkg/rag/provider.hpp"
#include "nlpkg/rag/session.hpp"
#include "nlpkg/search/engine.hpp"

namespace nlpkg::rag {

enum class Route { reuse_context, new_search };

std::string_view to_string(Route r);

// "REUSE" or "SEARCH" (case-insensitive, surrounding punctuation ignored);
// anything else is new_search.
Route parse_route(std::string_view reply);

// One term per line; bullets, numbering and quotes are stripped, case-folded
// duplicates dropped, at most `max_terms` kept.
std::vector<std::string> parse_terms(std::string_view reply, std::size_t max_terms);

struct ChatOptions {
    ContextBudget budget;
    std::size_t max_terms = 5;
    SamplingParams sampling;
};

struct ChatTurn {
    GroundedAnswer answer;
    Route route = Route::new_search;
    std::vector<std::string> terms;  // empty when the context was reused
    std::size_t round = 0;
    GroundingReport grounding;
};

class ChatEngine {
public:
    ChatEngine(const search::SearchEngine& search, const LlmProvider& provider, ChatOptions opts = {});

    // Falls back to {query} when the provider reply yields no term.
    std::vector<std::string> generate_search_terms(const std::string& query,
                                                   const std::vector<std::string>& history) const;

    // Top max_docs ids of one search over the terms joined by spaces.
    std::vector<std::string> retrieve(const std::vector<std::string>& terms) const;

    Route route_followup(const std::string& query, const ChatSession& session) const;

    // Appends the user message, a retrieval round when searching, and the
    // assistant answer to `session`, stamped with `at`. On error the session
    // is unchanged.
    ChatTurn conversational_answer(const std::string& query, ChatSession& session, const std::string& at = {}) const;

    const ChatOptions& options() const { return opts_; }

private:
    const search::SearchEngine& search_;
    const LlmProvider& provider_;
    ChatOptions opts_;
};

}  // namespace nlpkg::rag

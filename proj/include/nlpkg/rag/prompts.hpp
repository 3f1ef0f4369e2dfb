#pragma once

#include <string>
#include <vector>

#include "nlpkg/kg/fos_graph.hpp"
#include "nlpkg/rag/provider.hpp"

namespace nlpkg::rag::prompts {

// Marker strings the mock scripts key on.
inline constexpr const char* kTermsTask = "TASK: search-terms";
inline constexpr const char* kAnswerTask = "TASK: grounded-answer";
inline constexpr const char* kRouteTask = "TASK: route";
inline constexpr const char* kPaperTask = "TASK: ask-paper";
inline constexpr const char* kDescribeTask = "TASK: describe-fos";

// system, one worked example (user + assistant), then the real query with
// any earlier user turns.
std::vector<Message> search_terms(const std::string& query, const std::vector<std::string>& history,
                                  std::size_t max_terms);

std::vector<Message> grounded_answer(const std::string& query, const std::string& context, std::size_t n_docs);

std::vector<Message> route(const std::string& query, const std::vector<Message>& history,
                           const std::vector<std::string>& retrieved_titles);

std::vector<Message> ask_paper(const std::string& title, const std::string& context, const std::string& question);

std::vector<Message> describe_fos(const kg::FieldOfStudy& fos, const std::vector<std::string>& parent_names);

// Appended as a user turn before the single retry.
Message correction(const std::string& problem);

}  // namespace nlpkg::rag::prompts

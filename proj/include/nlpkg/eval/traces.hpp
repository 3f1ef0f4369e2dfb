#pragma once

#include <filesystem>
#include <vector>

#include <json.hpp>

#include "nlpkg/eval/metrics.hpp"

namespace nlpkg::eval {

// traces.jsonl: {"target", "total_steps", "ideal_steps"}; ideal_steps may be
// omitted when a graph is given and is then taken from the graph.
NavigationTrace trace_from_json(const nlohmann::json& j);
nlohmann::json to_json(const NavigationTrace& t);
std::vector<NavigationTrace> load_traces(const std::filesystem::path& path, const kg::FosGraph* graph = nullptr);
void save_traces(const std::vector<NavigationTrace>& traces, const std::filesystem::path& path);

// judgments.jsonl: {"child", "parent", "verdict"}.
RelationJudgment judgment_from_json(const nlohmann::json& j);
nlohmann::json to_json(const RelationJudgment& j);
std::vector<RelationJudgment> load_judgments(const std::filesystem::path& path);

// Every *.jsonl transcript in `dir`, sorted by session id.
std::vector<rag::ChatSession> load_sessions(const std::filesystem::path& dir);

nlohmann::json to_json(const PrfResult& r);
nlohmann::json to_json(const GroundingAggregate& g);

}  // namespace nlpkg::eval

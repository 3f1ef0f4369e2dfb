#include "nlpkg/eval/traces.hpp"

#include <algorithm>

#include "nlpkg/kg/fos_graph.hpp"
#include "nlpkg/util/jsonl.hpp"

namespace nlpkg::eval {

namespace {

std::size_t positive(const nlohmann::json& j, const char* key) {
    const auto v = j.at(key).get<std::int64_t>();
    if (v < 1) throw Error(std::string(key) + " must be >= 1");
    return static_cast<std::size_t>(v);
}

}  // namespace

NavigationTrace trace_from_json(const nlohmann::json& j) {
    NavigationTrace t;
    t.target = j.at("target").get<std::string>();
    t.total_steps = positive(j, "total_steps");
    t.ideal_steps = j.contains("ideal_steps") ? positive(j, "ideal_steps") : 0;
    return t;
}

nlohmann::json to_json(const NavigationTrace& t) {
    return {{"target", t.target}, {"total_steps", t.total_steps}, {"ideal_steps", t.ideal_steps}};
}

std::vector<NavigationTrace> load_traces(const std::filesystem::path& path, const kg::FosGraph* graph) {
    std::vector<NavigationTrace> out;
    jsonl::for_each(path, [&](const nlohmann::json& j, std::size_t line) {
        NavigationTrace t;
        try {
            t = trace_from_json(j);
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(path.string(), line, e.what());
        }
        if (t.ideal_steps == 0) {
            if (!graph) throw ParseError(path.string(), line, "ideal_steps missing and no graph given");
            t.ideal_steps = graph->ideal_steps(t.target);
        }
        out.push_back(std::move(t));
    });
    return out;
}

void save_traces(const std::vector<NavigationTrace>& traces, const std::filesystem::path& path) {
    std::vector<nlohmann::json> rows;
    for (const auto& t : traces) rows.push_back(to_json(t));
    jsonl::write_atomic(path, rows);
}

RelationJudgment judgment_from_json(const nlohmann::json& j) {
    return {j.at("child").get<std::string>(), j.at("parent").get<std::string>(),
            parse_verdict(j.at("verdict").get<std::string>())};
}

nlohmann::json to_json(const RelationJudgment& j) {
    return {{"child", j.child}, {"parent", j.parent}, {"verdict", to_string(j.verdict)}};
}

std::vector<RelationJudgment> load_judgments(const std::filesystem::path& path) {
    std::vector<RelationJudgment> out;
    jsonl::for_each(path, [&](const nlohmann::json& j, std::size_t) { out.push_back(judgment_from_json(j)); });
    return out;
}

std::vector<rag::ChatSession> load_sessions(const std::filesystem::path& dir) {
    if (!std::filesystem::is_directory(dir)) throw IoError("not a directory: " + dir.string());
    std::vector<rag::ChatSession> out;
    for (const auto& e : std::filesystem::directory_iterator(dir)) {
        if (e.path().extension() == ".jsonl") out.push_back(rag::read_session(e.path()));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    return out;
}

nlohmann::json to_json(const PrfResult& r) {
    return {{"precision", r.precision}, {"recall", r.recall}, {"f1", r.f1},
            {"correct", r.correct}, {"incorrect", r.incorrect}, {"missing", r.missing},
            {"precision_undefined", r.precision_undefined}, {"recall_undefined", r.recall_undefined},
            {"f1_undefined", r.f1_undefined}};
}

nlohmann::json to_json(const GroundingAggregate& g) {
    return {{"sessions", g.sessions}, {"messages", g.messages}, {"mean_coverage", g.mean_coverage},
            {"percent_valid", g.percent_valid}};
}

}  // namespace nlpkg::eval

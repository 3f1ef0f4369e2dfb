#include "nlpkg/eval/metrics.hpp"

#include <algorithm>
#include <set>

#include "nlpkg/rag/citations.hpp"

namespace nlpkg::eval {

double mape(const std::vector<NavigationTrace>& traces) {
    if (traces.empty()) throw EmptyTraces("mape needs at least one trace");
    std::vector<double> terms;
    terms.reserve(traces.size());
    for (const auto& t : traces) {
        if (t.ideal_steps == 0) throw ZeroIdeal("trace for '" + t.target + "' has ideal_steps = 0");
        const double diff = t.total_steps > t.ideal_steps ? static_cast<double>(t.total_steps - t.ideal_steps)
                                                          : static_cast<double>(t.ideal_steps - t.total_steps);
        terms.push_back(diff / static_cast<double>(t.ideal_steps));
    }
    std::sort(terms.begin(), terms.end());
    double sum = 0.0;
    for (double x : terms) sum += x;
    return sum / static_cast<double>(terms.size());
}

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::correct: return "correct";
        case Verdict::incorrect: return "incorrect";
        case Verdict::missing: return "missing";
    }
    return "correct";
}

Verdict parse_verdict(std::string_view s) {
    if (s == "correct") return Verdict::correct;
    if (s == "incorrect") return Verdict::incorrect;
    if (s == "missing") return Verdict::missing;
    throw Error("unknown verdict '" + std::string(s) + "'");
}

PrfResult relation_prf(const std::vector<RelationJudgment>& judgments) {
    if (judgments.empty()) throw EmptyJudgments("relation_prf needs at least one judgment");
    PrfResult r;
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& j : judgments) {
        if (!seen.emplace(j.child, j.parent).second) {
            throw DuplicateJudgment("relation " + j.child + " -> " + j.parent + " judged twice");
        }
        switch (j.verdict) {
            case Verdict::correct: ++r.correct; break;
            case Verdict::incorrect: ++r.incorrect; break;
            case Verdict::missing: ++r.missing; break;
        }
    }
    const double c = static_cast<double>(r.correct);
    if (r.correct + r.incorrect == 0) r.precision_undefined = true;
    else r.precision = c / static_cast<double>(r.correct + r.incorrect);
    if (r.correct + r.missing == 0) r.recall_undefined = true;
    else r.recall = c / static_cast<double>(r.correct + r.missing);
    if (r.precision + r.recall == 0.0) r.f1_undefined = true;
    else r.f1 = 2.0 * r.precision * r.recall / (r.precision + r.recall);
    return r;
}

GroundingAggregate grounding_report(const std::vector<rag::ChatSession>& sessions) {
    GroundingAggregate g;
    g.sessions = sessions.size();
    double coverage = 0.0;
    std::size_t valid = 0;
    for (const auto& s : sessions) {
        for (const auto& m : s.messages) {
            if (m.role != "assistant") continue;
            rag::GroundedAnswer a;
            a.text = m.content;
            a.citations = m.citations;
            const std::size_t n = m.round && *m.round < s.rounds.size() ? s.rounds[*m.round].docs.size() : 0;
            const auto rep = rag::grounding_check(a, n);
            ++g.messages;
            coverage += rep.citation_coverage;
            valid += rep.markers_valid ? 1 : 0;
        }
    }
    if (g.messages) {
        g.mean_coverage = coverage / static_cast<double>(g.messages);
        g.percent_valid = 100.0 * static_cast<double>(valid) / static_cast<double>(g.messages);
    }
    return g;
}

}  // namespace nlpkg::eval

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nlpkg/error.hpp"
#include "nlpkg/kg/fos_graph.hpp"
#include "nlpkg/rag/session.hpp"

namespace nlpkg::eval {

struct NavigationTrace {
    std::string target;
    std::size_t total_steps = 1;
    std::size_t ideal_steps = 1;
};

class EmptyTraces : public Error {
public:
    using Error::Error;
};

class ZeroIdeal : public Error {
public:
    using Error::Error;
};

// Mean of |total - ideal| / ideal. Terms are summed in sorted order, so the
// result does not depend on trace order.
double mape(const std::vector<NavigationTrace>& traces);

enum class Verdict { correct, incorrect, missing };

std::string_view to_string(Verdict v);
Verdict parse_verdict(std::string_view s);

struct RelationJudgment {
    std::string child;
    std::string parent;
    Verdict verdict = Verdict::correct;
};

class EmptyJudgments : public Error {
public:
    using Error::Error;
};

class DuplicateJudgment : public Error {
public:
    using Error::Error;
};

struct PrfResult {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    std::size_t correct = 0, incorrect = 0, missing = 0;
    // Set when the denominator was zero and the value defaulted to 0.
    bool precision_undefined = false;
    bool recall_undefined = false;
    bool f1_undefined = false;
};

PrfResult relation_prf(const std::vector<RelationJudgment>& judgments);

struct GroundingAggregate {
    std::size_t sessions = 0;
    std::size_t messages = 0;  // assistant messages checked
    double mean_coverage = 0.0;
    double percent_valid = 100.0;
};

// grounding_check over every assistant message, against the round it used.
GroundingAggregate grounding_report(const std::vector<rag::ChatSession>& sessions);

}  // namespace nlpkg::eval

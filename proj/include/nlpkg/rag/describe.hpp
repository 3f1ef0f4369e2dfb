#pragma once

#include <string>
#include <vector>

#include "nlpkg/kg/fos_graph.hpp"
#include "nlpkg/rag/provider.hpp"

namespace nlpkg::rag {

// Throws ReplyFormatError unless the reply is non-empty and has at most two
// sentences (checked again after one corrective retry). Returned trimmed.
std::string generate_fos_description(const kg::FosGraph& graph, const std::string& id, const LlmProvider& provider,
                                     const SamplingParams& sampling = {});

struct DescribeReport {
    std::vector<std::string> described;
    std::vector<std::string> skipped;  // already had a description
};

// Visits `ids` (all nodes when empty) in id order and stores each description.
// Nodes with a description are skipped unless `force`.
DescribeReport describe_all(kg::FosGraph& graph, const LlmProvider& provider, std::vector<std::string> ids = {},
                            bool force = false);

}  // namespace nlpkg::rag

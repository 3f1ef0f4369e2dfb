#include "nlpkg/rag/describe.hpp"

#include <algorithm>

#include "nlpkg/rag/fulltext.hpp"
#include "nlpkg/rag/prompts.hpp"
#include "nlpkg/text/normalize.hpp"

namespace nlpkg::rag {

namespace {

std::string check_description(const std::string& reply) {
    auto t = text::trim(reply);
    if (t.empty()) throw ReplyFormatError("empty description");
    const auto n = split_sentences(t).size();
    if (n > 2) throw ReplyFormatError("description has " + std::to_string(n) + " sentences, at most 2 allowed");
    return t;
}

}  // namespace

std::string generate_fos_description(const kg::FosGraph& graph, const std::string& id, const LlmProvider& provider,
                                     const SamplingParams& sampling) {
    const auto& node = graph.node(id);
    std::vector<std::string> parents;
    for (const auto& p : graph.parents(id)) parents.push_back(graph.node(p).name);
    auto messages = prompts::describe_fos(node, parents);
    auto reply = provider.complete(messages, sampling);
    try {
        return check_description(reply);
    } catch (const ReplyFormatError& e) {
        messages.push_back({"assistant", reply});
        messages.push_back(prompts::correction(std::string(e.what()) + "."));
        return check_description(provider.complete(messages, sampling));
    }
}

DescribeReport describe_all(kg::FosGraph& graph, const LlmProvider& provider, std::vector<std::string> ids,
                            bool force) {
    if (ids.empty()) ids = graph.ids();
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    for (const auto& id : ids) graph.node(id);

    DescribeReport r;
    for (const auto& id : ids) {
        if (graph.node(id).description && !force) {
            r.skipped.push_back(id);
            continue;
        }
        graph.set_description(id, generate_fos_description(graph, id, provider));
        r.described.push_back(id);
    }
    return r;
}

}  // namespace nlpkg::rag

#include "nlpkg/rag/prompts.hpp"

namespace nlpkg::rag::prompts {

std::vector<Message> search_terms(const std::string& query, const std::vector<std::string>& history,
                                  std::size_t max_terms) {
    const std::string system = std::string(kTermsTask) +
        "\nYou turn questions about NLP research into literature search terms. Reply with between 1 and " +
        std::to_string(max_terms) + " short search terms, one per line, and nothing else.";
    std::string user;
    if (!history.empty()) {
        user += "Earlier questions in this conversation:\n";
        for (const auto& h : history) user += "- " + h + "\n";
        user += "\n";
    }
    user += "Question: " + query;
    return {
        {"system", system},
        {"user", "Question: Which methods make pretrained language models smaller without losing accuracy?"},
        {"assistant", "knowledge distillation\nmodel compression\nquantization of language models"},
        {"user", user},
    };
}

std::vector<Message> grounded_answer(const std::string& query, const std::string& context, std::size_t n_docs) {
    std::string system = std::string(kAnswerTask) +
        "\nAnswer the question using only the numbered publications below. Cite them inline with their "
        "number in square brackets, for example [1].";
    if (n_docs == 0) {
        system += " No publications were found, so say that the literature at hand does not cover the question "
                  "and do not cite anything.";
    } else {
        system += " Valid citation numbers are 1 to " + std::to_string(n_docs) + ".";
    }
    system += "\n\nPublications:\n" + (context.empty() ? std::string("(none)") : context);
    return {{"system", system}, {"user", query}};
}

std::vector<Message> route(const std::string& query, const std::vector<Message>& history,
                           const std::vector<std::string>& retrieved_titles) {
    std::string system = std::string(kRouteTask) +
        "\nDecide whether the follow-up question can be answered from the publications already retrieved. "
        "Reply with exactly one word: REUSE or SEARCH.\n\nRetrieved publications:\n";
    for (std::size_t i = 0; i < retrieved_titles.size(); ++i) {
        system += "[" + std::to_string(i + 1) + "] " + retrieved_titles[i] + "\n";
    }
    std::string convo;
    for (const auto& m : history) convo += m.role + ": " + m.content + "\n";
    return {{"system", system}, {"user", "Conversation so far:\n" + convo + "\nFollow-up question: " + query}};
}

std::vector<Message> ask_paper(const std::string& title, const std::string& context, const std::string& question) {
    const std::string system = std::string(kPaperTask) +
        "\nAnswer questions about a single publication using only its full text below. Each paragraph is "
        "tagged with its section and page. Reply in exactly this format:\n"
        "ANSWER: <answer>\n"
        "SUPPORT: <statement from the publication> (Section: <section>, Page: <page>)\n"
        "(one SUPPORT line per supporting statement)\n"
        "FOLLOWUP: <question>\n"
        "(exactly three FOLLOWUP lines, all different)\n\n"
        "Publication: " + title + "\n\n" + context;
    return {{"system", system}, {"user", question}};
}

std::vector<Message> describe_fos(const kg::FieldOfStudy& fos, const std::vector<std::string>& parent_names) {
    std::string user = "Field of study: " + fos.name;
    if (!fos.synonyms.empty()) {
        user += "\nAlso known as: ";
        for (std::size_t i = 0; i < fos.synonyms.size(); ++i) user += (i ? ", " : "") + fos.synonyms[i];
    }
    if (!parent_names.empty()) {
        user += "\nSubfield of: ";
        for (std::size_t i = 0; i < parent_names.size(); ++i) user += (i ? ", " : "") + parent_names[i];
    }
    return {{"system", std::string(kDescribeTask) +
                           "\nWrite a description of the given NLP field of study in at most two sentences."},
            {"user", user}};
}

Message correction(const std::string& problem) {
    return {"user", "Your previous reply could not be used: " + problem + " Please answer again following the format."};
}

}  // namespace nlpkg::rag::prompts

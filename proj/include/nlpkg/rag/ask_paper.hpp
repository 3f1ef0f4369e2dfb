#pragma once

#include <array>
#include <string>

#include "nlpkg/kg/corpus.hpp"
#include "nlpkg/rag/citations.hpp"
#include "nlpkg/rag/fulltext.hpp"
#include "nlpkg/rag/provider.hpp"

namespace nlpkg::rag {

class NoFullText : public Error {
public:
    using Error::Error;
};

class UnknownQuestion : public Error {
public:
    using Error::Error;
};

const std::array<std::string, 3>& predefined_questions();

// 1-based id.
const std::string& predefined_question(int id);

// Parses the ANSWER / SUPPORT / FOLLOWUP reply. Throws ReplyFormatError when
// the answer is missing, a SUPPORT line lacks "(Section: s, Page: n)", the
// page lies outside 1..ft.pages, or there are not exactly three distinct
// follow-up questions.
GroundedAnswer parse_paper_reply(std::string_view reply, const FullText& ft);

struct AskOptions {
    std::size_t budget_chars = 120000;
    SamplingParams sampling;
};

// One retry with a corrective message on a malformed reply.
GroundedAnswer ask_paper(const kg::Corpus& corpus, const kg::Publication& pub, const std::string& question,
                         const LlmProvider& provider, const AskOptions& opts = {});

}  // namespace nlpkg::rag

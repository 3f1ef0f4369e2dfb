#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "nlpkg/error.hpp"

namespace nlpkg::rag {

struct Citation {
    std::size_t marker = 0;
    std::string pub_id;

    friend bool operator==(const Citation&, const Citation&) = default;
};

struct SupportStatement {
    std::string text;
    std::string section;
    int page = 0;

    friend bool operator==(const SupportStatement&, const SupportStatement&) = default;
};

struct GroundedAnswer {
    std::string text;
    std::vector<Citation> citations;  // ascending marker, one per distinct marker
    std::vector<SupportStatement> support;
    std::vector<std::string> followups;
};

nlohmann::json to_json(const GroundedAnswer& a);

class UngroundedCitation : public Error {
public:
    UngroundedCitation(std::vector<std::size_t> bad, std::size_t n_docs);
    const std::vector<std::size_t>& markers() const noexcept { return bad_; }

private:
    std::vector<std::size_t> bad_;
};

// Bracketed integer markers: "[2]" and lists such as "[1, 3]", in text order.
std::vector<std::size_t> extract_markers(std::string_view text);

// Maps markers to `retrieved` (marker n -> retrieved[n-1]); throws
// UngroundedCitation for any marker outside 1..retrieved.size().
GroundedAnswer ground_answer(std::string text, const std::vector<std::string>& retrieved);

struct GroundingReport {
    bool markers_valid = true;
    double citation_coverage = 0.0;
    std::size_t sentences = 0;
    std::size_t cited_sentences = 0;
};

GroundingReport grounding_check(const GroundedAnswer& answer, std::size_t n_retrieved);

}  // namespace nlpkg::rag

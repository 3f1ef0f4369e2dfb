#include "nlpkg/rag/citations.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "nlpkg/rag/fulltext.hpp"

namespace nlpkg::rag {

namespace {

std::string join(const std::vector<std::size_t>& v) {
    std::string s;
    for (auto x : v) s += (s.empty() ? "" : ", ") + std::to_string(x);
    return s;
}

}  // namespace

UngroundedCitation::UngroundedCitation(std::vector<std::size_t> bad, std::size_t n_docs)
    : Error("citation markers [" + join(bad) + "] do not refer to the " + std::to_string(n_docs) +
            " retrieved documents"),
      bad_(std::move(bad)) {}

std::vector<std::size_t> extract_markers(std::string_view text) {
    std::vector<std::size_t> out;
    std::size_t i = 0;
    while ((i = text.find('[', i)) != std::string_view::npos) {
        const auto close = text.find(']', i);
        if (close == std::string_view::npos) break;
        const auto inner = text.substr(i + 1, close - i - 1);
        std::vector<std::size_t> nums;
        std::size_t cur = 0;
        bool digits = false, ok = !inner.empty();
        for (char c : inner) {
            if (std::isdigit(static_cast<unsigned char>(c))) {
                cur = cur * 10 + static_cast<std::size_t>(c - '0');
                digits = true;
                if (cur > 1000000) ok = false;
            } else if (c == ',') {
                if (!digits) ok = false;
                nums.push_back(cur);
                cur = 0;
                digits = false;
            } else if (c != ' ') {
                ok = false;
            }
        }
        if (ok && digits) {
            nums.push_back(cur);
            out.insert(out.end(), nums.begin(), nums.end());
            i = close + 1;
        } else {
            ++i;
        }
    }
    return out;
}

GroundedAnswer ground_answer(std::string text, const std::vector<std::string>& retrieved) {
    const auto markers = extract_markers(text);
    std::set<std::size_t> distinct(markers.begin(), markers.end());
    std::vector<std::size_t> bad;
    for (auto m : distinct) {
        if (m < 1 || m > retrieved.size()) bad.push_back(m);
    }
    if (!bad.empty()) throw UngroundedCitation(bad, retrieved.size());
    GroundedAnswer a;
    a.text = std::move(text);
    for (auto m : distinct) a.citations.push_back({m, retrieved[m - 1]});
    return a;
}

GroundingReport grounding_check(const GroundedAnswer& answer, std::size_t n_retrieved) {
    GroundingReport r;
    std::set<std::size_t> mapped;
    for (const auto& c : answer.citations) mapped.insert(c.marker);
    for (auto m : extract_markers(answer.text)) {
        if (m < 1 || m > n_retrieved || !mapped.count(m)) r.markers_valid = false;
    }
    for (const auto& s : split_sentences(answer.text)) {
        ++r.sentences;
        if (!extract_markers(s).empty()) ++r.cited_sentences;
    }
    r.citation_coverage = r.sentences ? static_cast<double>(r.cited_sentences) / static_cast<double>(r.sentences) : 0.0;
    return r;
}

nlohmann::json to_json(const GroundedAnswer& a) {
    nlohmann::json j{{"text", a.text}};
    j["citations"] = nlohmann::json::array();
    for (const auto& c : a.citations) j["citations"].push_back({{"marker", c.marker}, {"pub_id", c.pub_id}});
    if (!a.support.empty()) {
        j["support"] = nlohmann::json::array();
        for (const auto& s : a.support) j["support"].push_back({{"text", s.text}, {"section", s.section}, {"page", s.page}});
    }
    if (!a.followups.empty()) j["followups"] = a.followups;
    return j;
}

}  // namespace nlpkg::rag

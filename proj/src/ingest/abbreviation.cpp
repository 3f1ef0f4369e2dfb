#include "nlpkg/ingest/abbreviation.hpp"

#include <cctype>


namespace nlpkg::ingest {
namespace {

bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_alpha(char c) { return is_upper(c) || is_lower(c); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }
bool is_clause_break(char c) {
    switch (c) {
        case '.': case ',': case ';': case ':': case '!': case '?':
        case '(': case ')': case '[': case ']': case '"':
            return true;
        default:
            return false;
    }
}

// Letters of the abbreviation, lowercased, or empty when `inner` is not one.
std::string abbreviation_letters(std::string_view inner) {
    if (inner.size() < 2 || inner.size() > 10 || !is_alpha(inner.front())) return {};
    int upper = 0;
    int lower = 0;
    std::string letters;
    for (char c : inner) {
        if (is_upper(c)) {
            ++upper;
        } else if (is_lower(c)) {
            ++lower;
        } else if (!is_digit(c) && c != '-' && c != '&' && c != '/') {
            return {};
        }
        if (is_alpha(c)) letters.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    }
    if (upper <= lower || letters.size() < 2) return {};
    return letters;
}

struct Word {
    std::size_t begin;  // offsets into the scanned text
    std::size_t end;
    std::string initials;  // one per hyphen-separated part starting with a letter
};

std::vector<Word> words_before(std::string_view text, std::size_t limit) {
    // Walk back to the previous clause break.
    std::size_t start = limit;
    while (start > 0 && !is_clause_break(text[start - 1])) --start;
    std::vector<Word> words;
    std::size_t i = start;
    while (i < limit) {
        while (i < limit && is_space(text[i])) ++i;
        if (i >= limit) break;
        Word w{i, i, {}};
        bool at_part_start = true;
        while (i < limit && !is_space(text[i])) {
            const char c = text[i];
            if (c == '-' || c == '/') {
                at_part_start = true;
            } else {
                if (at_part_start && is_alpha(c)) {
                    w.initials.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
                }
                at_part_start = false;
            }
            ++i;
        }
        w.end = i;
        words.push_back(std::move(w));
    }
    return words;
}

bool is_subsequence(std::string_view needle, std::string_view hay) {
    std::size_t j = 0;
    for (std::size_t i = 0; i < hay.size() && j < needle.size(); ++i) {
        if (hay[i] == needle[j]) ++j;
    }
    return j == needle.size();
}

std::optional<AbbreviationPair> match_at(std::string_view text, std::size_t open, std::size_t close) {
    const std::string_view inner = text.substr(open + 1, close - open - 1);
    const std::string letters = abbreviation_letters(inner);
    if (letters.empty()) return std::nullopt;
    // "Immediately follows": only whitespace between the term and '('.
    std::size_t before = open;
    while (before > 0 && is_space(text[before - 1])) --before;
    if (before == 0 || is_clause_break(text[before - 1])) return std::nullopt;

    const auto words = words_before(text, before);
    const std::size_t max_words = letters.size() + 5;
    std::string initials;
    for (std::size_t k = 1; k <= words.size() && k <= max_words; ++k) {
        const Word& first = words[words.size() - k];
        initials = first.initials + initials;
        if (initials.size() < 2) continue;
        if (initials.front() != letters.front()) continue;
        if (!is_subsequence(letters, initials)) continue;
        return AbbreviationPair{std::string(text.substr(first.begin, words.back().end - first.begin)),
                                std::string(inner)};
    }
    return std::nullopt;
}

}  // namespace

std::vector<AbbreviationPair> extract_abbreviations(std::string_view text) {
    std::vector<AbbreviationPair> out;
    for (std::size_t open = text.find('('); open != std::string_view::npos; open = text.find('(', open + 1)) {
        const std::size_t close = text.find_first_of("()", open + 1);
        if (close == std::string_view::npos || text[close] != ')') continue;
        if (auto pair = match_at(text, open, close)) out.push_back(std::move(*pair));
    }
    return out;
}

std::optional<AbbreviationPair> extract_abbreviation(std::string_view text) {
    auto all = extract_abbreviations(text);
    if (all.empty()) return std::nullopt;
    return all.front();
}

}  // namespace nlpkg::ingest

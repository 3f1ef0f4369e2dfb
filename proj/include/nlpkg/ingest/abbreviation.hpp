#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nlpkg::ingest {

struct AbbreviationPair {
    std::string long_form;
    std::string abbreviation;

    friend bool operator==(const AbbreviationPair&, const AbbreviationPair&) = default;
};

/// Finds "long form (ABBR)" where ABBR is a single parenthesized token of
/// 2-10 characters, starting with a letter, with more uppercase than
/// lowercase letters, placed right after a term of two or more words.
/// The long form is the shortest run of preceding words (at most
/// letters(ABBR) + 5, not crossing clause punctuation) whose first initial
/// equals ABBR's first letter and whose word initials contain ABBR's letters
/// as a case-insensitive subsequence. Hyphenated parts count as words.
std::optional<AbbreviationPair> extract_abbreviation(std::string_view text);

// Every pair in `text`, left to right.
std::vector<AbbreviationPair> extract_abbreviations(std::string_view text);

}  // namespace nlpkg::ingest

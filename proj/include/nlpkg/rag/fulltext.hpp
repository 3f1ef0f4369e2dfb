#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace nlpkg::rag {

struct Paragraph {
    std::string text;
    std::string section;  // nearest preceding "# " heading, empty before the first
    int page = 1;
};

// Plain-text full text: paragraphs are separated by blank lines, a line
// starting with "# " opens a section, a form feed starts the next page.
struct FullText {
    std::vector<Paragraph> paragraphs;
    int pages = 1;
    std::vector<std::string> sections;  // in order of appearance
};

FullText parse_fulltext(std::string_view raw);

// Splits after '.', '!' or '?' followed by whitespace (a trailing citation
// marker stays with its sentence), and at newlines.
std::vector<std::string> split_sentences(std::string_view text);

}  // namespace nlpkg::rag

#include "nlpkg/text/normalize.hpp"

#include <cstdint>

namespace nlpkg::text {
namespace {

bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool is_word_byte(unsigned char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c >= 0x80;
}

}  // namespace

std::string fold(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        const auto c = static_cast<unsigned char>(s[i]);
        if (c < 0x80) {
            out.push_back(c >= 'A' && c <= 'Z' ? static_cast<char>(c + 32) : static_cast<char>(c));
            continue;
        }
        if (c == 0xE2 && i + 2 < s.size()) {
            const auto c1 = static_cast<unsigned char>(s[i + 1]);
            const auto c2 = static_cast<unsigned char>(s[i + 2]);
            if (c1 == 0x80 && c2 >= 0x90 && c2 <= 0x95) {  // U+2010..U+2015
                out.push_back('-');
                i += 2;
                continue;
            }
            if (c1 == 0x88 && c2 == 0x92) {  // U+2212 minus sign
                out.push_back('-');
                i += 2;
                continue;
            }
            if (c1 == 0x80 && c2 >= 0x98 && c2 <= 0x9B) {  // single quotes
                out.push_back('\'');
                i += 2;
                continue;
            }
            if (c1 == 0x80 && c2 >= 0x9C && c2 <= 0x9F) {  // double quotes
                out.push_back('"');
                i += 2;
                continue;
            }
        }
        if (c == 0xC2 && i + 1 < s.size() && static_cast<unsigned char>(s[i + 1]) == 0xA0) {
            out.push_back(' ');
            ++i;
            continue;
        }
        // Latin-1 capitals U+00C0..U+00DE except U+00D7 (multiplication sign).
        if (c == 0xC3 && i + 1 < s.size()) {
            const auto c1 = static_cast<unsigned char>(s[i + 1]);
            out.push_back(static_cast<char>(c));
            out.push_back(static_cast<char>(c1 >= 0x80 && c1 <= 0x9E && c1 != 0x97 ? c1 + 0x20 : c1));
            ++i;
            continue;
        }
        out.push_back(static_cast<char>(c));
    }
    return out;
}

std::string trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && is_space(s[b])) ++b;
    while (e > b && is_space(s[e - 1])) --e;
    return std::string(s.substr(b, e - b));
}

std::string normalize_name(std::string_view s) {
    const std::string folded = fold(s);
    std::string out;
    out.reserve(folded.size());
    bool pending_space = false;
    for (char c : folded) {
        if (c == '-' || c == '_' || is_space(c)) {
            pending_space = !out.empty();
            continue;
        }
        if (pending_space) {
            out.push_back(' ');
            pending_space = false;
        }
        out.push_back(c);
    }
    return out;
}

std::vector<std::string> tokenize(std::string_view s) {
    const std::string folded = fold(s);
    std::vector<std::string> tokens;
    std::string cur;
    for (std::size_t i = 0; i < folded.size(); ++i) {
        const auto c = static_cast<unsigned char>(folded[i]);
        if (is_word_byte(c)) {
            cur.push_back(static_cast<char>(c));
        } else if (c == '\'' && !cur.empty() && i + 1 < folded.size() &&
                   is_word_byte(static_cast<unsigned char>(folded[i + 1]))) {
            continue;
        } else if (!cur.empty()) {
            tokens.push_back(std::move(cur));
            cur.clear();
        }
    }
    if (!cur.empty()) {
        tokens.push_back(std::move(cur));
    }
    return tokens;
}

}  // namespace nlpkg::text

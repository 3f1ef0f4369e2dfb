#include "nlpkg/text/porter.hpp"

#include <array>

namespace nlpkg::text {
namespace {

bool is_consonant(std::string_view w, std::size_t i) {
    switch (w[i]) {
        case 'a': case 'e': case 'i': case 'o': case 'u':
            return false;
        case 'y':
            return i == 0 || !is_consonant(w, i - 1);
        default:
            return true;
    }
}

// Number of VC sequences in [C](VC){m}[V].
int measure(std::string_view w) {
    int m = 0;
    std::size_t i = 0;
    const std::size_t n = w.size();
    while (i < n && is_consonant(w, i)) ++i;
    while (i < n) {
        while (i < n && !is_consonant(w, i)) ++i;
        if (i >= n) break;
        while (i < n && is_consonant(w, i)) ++i;
        ++m;
    }
    return m;
}

bool contains_vowel(std::string_view w) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (!is_consonant(w, i)) return true;
    }
    return false;
}

bool ends_double_consonant(std::string_view w) {
    const auto n = w.size();
    return n >= 2 && w[n - 1] == w[n - 2] && is_consonant(w, n - 1);
}

// *o: ends consonant-vowel-consonant, last consonant not w, x or y.
bool ends_cvc(std::string_view w) {
    const auto n = w.size();
    if (n < 3) return false;
    if (!is_consonant(w, n - 3) || is_consonant(w, n - 2) || !is_consonant(w, n - 1)) return false;
    const char c = w[n - 1];
    return c != 'w' && c != 'x' && c != 'y';
}

bool ends_with(std::string_view w, std::string_view suffix) {
    return w.size() >= suffix.size() && w.substr(w.size() - suffix.size()) == suffix;
}

struct Rule {
    std::string_view suffix;
    std::string_view replacement;
};

// First rule whose suffix matches decides; the replacement applies only if
// the remaining stem has measure > min_measure.
template <std::size_t N>
void apply_first(std::string& w, const std::array<Rule, N>& rules, int min_measure) {
    for (const auto& r : rules) {
        if (ends_with(w, r.suffix)) {
            std::string_view stem(w.data(), w.size() - r.suffix.size());
            if (measure(stem) > min_measure) {
                w = std::string(stem);
                w += r.replacement;
            }
            return;
        }
    }
}

void step1a(std::string& w) {
    if (ends_with(w, "sses")) {
        w.resize(w.size() - 2);
    } else if (ends_with(w, "ies")) {
        w.resize(w.size() - 2);
    } else if (ends_with(w, "ss")) {
    } else if (ends_with(w, "s")) {
        w.pop_back();
    }
}

void step1b(std::string& w) {
    if (ends_with(w, "eed")) {
        if (measure(std::string_view(w).substr(0, w.size() - 3)) > 0) {
            w.pop_back();
        }
        return;
    }
    std::size_t cut = 0;
    if (ends_with(w, "ed") && contains_vowel(std::string_view(w).substr(0, w.size() - 2))) {
        cut = 2;
    } else if (ends_with(w, "ing") && contains_vowel(std::string_view(w).substr(0, w.size() - 3))) {
        cut = 3;
    }
    if (cut == 0) return;
    w.resize(w.size() - cut);
    if (ends_with(w, "at") || ends_with(w, "bl") || ends_with(w, "iz")) {
        w.push_back('e');
    } else if (ends_double_consonant(w)) {
        const char c = w.back();
        if (c != 'l' && c != 's' && c != 'z') w.pop_back();
    } else if (measure(w) == 1 && ends_cvc(w)) {
        w.push_back('e');
    }
}

void step1c(std::string& w) {
    if (ends_with(w, "y") && contains_vowel(std::string_view(w).substr(0, w.size() - 1))) {
        w.back() = 'i';
    }
}

void step2(std::string& w) {
    static constexpr std::array<Rule, 20> rules{{
        {"ational", "ate"}, {"tional", "tion"}, {"enci", "ence"},   {"anci", "ance"},
        {"izer", "ize"},    {"abli", "able"},   {"alli", "al"},     {"entli", "ent"},
        {"eli", "e"},       {"ousli", "ous"},   {"ization", "ize"}, {"ation", "ate"},
        {"ator", "ate"},    {"alism", "al"},    {"iveness", "ive"}, {"fulness", "ful"},
        {"ousness", "ous"}, {"aliti", "al"},    {"iviti", "ive"},   {"biliti", "ble"},
    }};
    apply_first(w, rules, 0);
}

void step3(std::string& w) {
    static constexpr std::array<Rule, 7> rules{{
        {"icate", "ic"}, {"ative", ""}, {"alize", "al"}, {"iciti", "ic"},
        {"ical", "ic"},  {"ful", ""},   {"ness", ""},
    }};
    apply_first(w, rules, 0);
}

void step4(std::string& w) {
    static constexpr std::array<std::string_view, 19> suffixes{
        "al",  "ance", "ence", "er",  "ic",  "able", "ible", "ant", "ement", "ment",
        "ent", "ion",  "ou",   "ism", "ate", "iti",  "ous",  "ive", "ize",
    };
    for (auto suffix : suffixes) {
        if (!ends_with(w, suffix)) continue;
        std::string_view stem(w.data(), w.size() - suffix.size());
        if (suffix == "ion" && (stem.empty() || (stem.back() != 's' && stem.back() != 't'))) {
            return;
        }
        if (measure(stem) > 1) w.resize(stem.size());
        return;
    }
}

void step5(std::string& w) {
    if (ends_with(w, "e")) {
        std::string_view stem(w.data(), w.size() - 1);
        const int m = measure(stem);
        if (m > 1 || (m == 1 && !ends_cvc(stem))) w.pop_back();
    }
    if (measure(w) > 1 && ends_double_consonant(w) && w.back() == 'l') {
        w.pop_back();
    }
}

}  // namespace

std::string porter_stem_once(std::string_view word) {
    std::string w(word);
    if (w.size() <= 2) return w;
    for (char c : w) {
        if (c < 'a' || c > 'z') return w;
    }
    step1a(w);
    step1b(w);
    step1c(w);
    step2(w);
    step3(w);
    step4(w);
    step5(w);
    return w;
}

std::string stem(std::string_view word) {
    std::string cur(word);
    // Each pass either shortens the word or leaves it unchanged apart from
    // same-length rewrites (y -> i, abli -> able) that are never undone.
    for (int i = 0; i < 16; ++i) {
        std::string next = porter_stem_once(cur);
        if (next == cur) break;
        cur = std::move(next);
    }
    return cur;
}

}  // namespace nlpkg::text

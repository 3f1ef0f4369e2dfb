#include "nlpkg/rag/fulltext.hpp"

#include <cctype>

#include "nlpkg/text/normalize.hpp"

namespace nlpkg::rag {

FullText parse_fulltext(std::string_view raw) {
    FullText ft;
    std::string section;
    int page = 1;
    std::string current;
    int current_page = 1;

    auto flush = [&] {
        auto t = text::trim(current);
        if (!t.empty()) ft.paragraphs.push_back({std::move(t), section, current_page});
        current.clear();
    };

    std::size_t pos = 0;
    while (pos <= raw.size()) {
        auto nl = raw.find('\n', pos);
        std::string_view line = raw.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? raw.size() + 1 : nl + 1;

        while (!line.empty() && line.front() == '\f') {
            flush();
            ++page;
            line.remove_prefix(1);
        }
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        if (line.rfind("# ", 0) == 0) {
            flush();
            section = text::trim(line.substr(2));
            ft.sections.push_back(section);
            continue;
        }
        if (text::trim(line).empty()) {
            flush();
            continue;
        }
        if (current.empty()) current_page = page;
        else current.push_back(' ');
        current.append(text::trim(line));
    }
    flush();
    ft.pages = page;
    return ft;
}

std::vector<std::string> split_sentences(std::string_view s) {
    std::vector<std::string> out;
    std::string cur;
    auto push = [&] {
        auto t = text::trim(cur);
        if (!t.empty()) out.push_back(std::move(t));
        cur.clear();
    };
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        if (c == '\n') {
            push();
            continue;
        }
        cur.push_back(c);
        if (c == '.' || c == '!' || c == '?') {
            // keep "[3]" attached when it follows the terminator
            std::size_t j = i + 1;
            while (j < s.size() && s[j] == ' ') ++j;
            if (j < s.size() && s[j] == '[') {
                auto close = s.find(']', j);
                if (close != std::string_view::npos) {
                    const auto inner = s.substr(j + 1, close - j - 1);
                    bool marker = !inner.empty();
                    for (char d : inner) marker = marker && (std::isdigit(static_cast<unsigned char>(d)) || d == ',' || d == ' ');
                    if (marker) {
                        cur.append(s.substr(i + 1, close - i));
                        i = close;
                    }
                }
            }
            if (i + 1 >= s.size() || s[i + 1] == ' ' || s[i + 1] == '\t' || s[i + 1] == '\n' || s[i + 1] == '\r') push();
        }
    }
    push();
    return out;
}

}  // namespace nlpkg::rag

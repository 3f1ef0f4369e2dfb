#include "nlpkg/text/analyzer.hpp"

#include "nlpkg/text/normalize.hpp"
#include "nlpkg/text/porter.hpp"

namespace nlpkg::text {

std::vector<std::string> analyze(std::string_view s) {
    auto tokens = tokenize(s);
    for (auto& t : tokens) {
        t = stem(t);
    }
    return tokens;
}

}  // namespace nlpkg::text

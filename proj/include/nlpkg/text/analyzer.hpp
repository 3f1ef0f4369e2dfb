#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace nlpkg::text {

// tokenize() followed by stem() on every token. The one analysis chain shared
// by the lexicon, the classifiers, BM25 and the hashing embedder.
std::vector<std::string> analyze(std::string_view s);

}  // namespace nlpkg::text

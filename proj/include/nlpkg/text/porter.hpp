#pragma once

#include <string>
#include <string_view>

namespace nlpkg::text {

/// One pass of the original Porter (1980) suffix-stripping algorithm.
/// Input is expected lowercase; tokens of length <= 2 or containing anything
/// but a-z are returned unchanged.
std::string porter_stem_once(std::string_view word);

/// Stem used everywhere in the engine: porter_stem_once iterated to a fixed
/// point, so stem(stem(w)) == stem(w). A single Porter pass is not
/// idempotent ("agreed" -> "agre" -> "agr").
std::string stem(std::string_view word);

}  // namespace nlpkg::text

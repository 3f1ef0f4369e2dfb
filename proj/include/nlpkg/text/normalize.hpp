#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace nlpkg::text {

// Maps Unicode dashes, minus, curly quotes and no-break space to their ASCII
// counterparts and lowercases ASCII and Latin-1 letters. Other bytes are kept.
std::string fold(std::string_view s);

/// Canonical form used for every name comparison in the graph and for
/// synonym clustering: fold(), hyphens and underscores become spaces, then
/// trim and collapse runs of whitespace to a single space.
std::string normalize_name(std::string_view s);

/// Word tokens of `s` after fold(). A token is a maximal run of [a-z0-9] or
/// non-ASCII bytes; apostrophes inside a word are dropped ("model's" ->
/// "models"), everything else separates.
std::vector<std::string> tokenize(std::string_view s);

std::string trim(std::string_view s);

}  // namespace nlpkg::text

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "nlpkg/error.hpp"

namespace nlpkg::search {

enum class Source { sparse, dense, fused, reranked };

std::string_view to_string(Source s);

struct RankedEntry {
    std::string id;
    double score = 0.0;
    // 1-based positions in the source lists, 0 when absent.
    std::size_t sparse_rank = 0;
    std::size_t dense_rank = 0;
};

// Ordered by (score desc, id asc), no duplicate ids.
struct RankedList {
    Source source = Source::sparse;
    std::vector<RankedEntry> entries;

    std::size_t size() const { return entries.size(); }
    bool empty() const { return entries.empty(); }
    std::vector<std::string> ids() const;
};

void sort_ranked(std::vector<RankedEntry>& entries);

class EmptyQuery : public Error {
public:
    using Error::Error;
};

class InvalidConfig : public Error {
public:
    using Error::Error;
};

}  // namespace nlpkg::search

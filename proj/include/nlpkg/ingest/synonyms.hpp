#pragma once

#include <string>
#include <vector>

#include "nlpkg/ingest/abbreviation.hpp"

namespace nlpkg::ingest {

struct SynonymCluster {
    std::string canonical;
    std::vector<std::string> members;  // sorted, unique, contains canonical

    friend bool operator==(const SynonymCluster&, const SynonymCluster&) = default;
};

/// Partitions `surfaces` into synonym clusters. Surfaces merge when their
/// normalize_name() forms are equal, or when a long form / abbreviation pair
/// links them: pairs come from `observed` and from surfaces that themselves
/// read "long form (ABBR)". The canonical member is the longest surface
/// (ties: lexicographically smallest); surfaces carrying a parenthesized
/// abbreviation are only chosen when nothing else is in the cluster.
/// The result is independent of input order; clusters are sorted by
/// canonical.
std::vector<SynonymCluster> cluster_synonyms(const std::vector<std::string>& surfaces,
                                             const std::vector<AbbreviationPair>& observed = {});

}  // namespace nlpkg::ingest

#include "nlpkg/ingest/synonyms.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include "nlpkg/text/normalize.hpp"

namespace nlpkg::ingest {
namespace {

class DisjointSets {
public:
    std::size_t id(const std::string& key) {
        auto [it, inserted] = ids_.emplace(key, parent_.size());
        if (inserted) parent_.push_back(parent_.size());
        return it->second;
    }

    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::unordered_map<std::string, std::size_t> ids_;
    std::vector<std::size_t> parent_;
};

bool better_canonical(const std::string& a, const std::string& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
}

}  // namespace

std::vector<SynonymCluster> cluster_synonyms(const std::vector<std::string>& surfaces,
                                             const std::vector<AbbreviationPair>& observed) {
    const std::set<std::string> unique(surfaces.begin(), surfaces.end());
    DisjointSets sets;
    std::set<std::string> parenthesized;

    auto link = [&](const std::string& a, const std::string& b) {
        const auto ka = text::normalize_name(a);
        const auto kb = text::normalize_name(b);
        if (ka.empty() || kb.empty()) return;
        sets.unite(sets.id(ka), sets.id(kb));
    };

    for (const auto& s : unique) sets.id(text::normalize_name(s));
    for (const auto& p : observed) link(p.long_form, p.abbreviation);
    for (const auto& s : unique) {
        for (const auto& p : extract_abbreviations(s)) {
            link(p.long_form, p.abbreviation);
            if (text::trim(s).back() == ')' && text::trim(s).rfind("(" + p.abbreviation + ")") != std::string::npos) {
                link(s, p.long_form);
                parenthesized.insert(s);
            }
        }
    }

    std::map<std::size_t, std::vector<std::string>> groups;
    for (const auto& s : unique) {
        groups[sets.find(sets.id(text::normalize_name(s)))].push_back(s);
    }

    std::vector<SynonymCluster> out;
    out.reserve(groups.size());
    for (auto& [root, members] : groups) {
        SynonymCluster c;
        c.members = std::move(members);  // already sorted: iterated from a std::set
        const std::string* best = nullptr;
        for (const auto& m : c.members) {
            if (parenthesized.count(m)) continue;
            if (!best || better_canonical(m, *best)) best = &m;
        }
        if (!best) {
            for (const auto& m : c.members) {
                if (!best || better_canonical(m, *best)) best = &m;
            }
        }
        c.canonical = *best;
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(),
              [](const SynonymCluster& a, const SynonymCluster& b) { return a.canonical < b.canonical; });
    return out;
}

}  // namespace nlpkg::ingest

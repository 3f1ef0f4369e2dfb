#include "nlpkg/kg/fos_graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>

#include "nlpkg/text/normalize.hpp"

namespace nlpkg::kg {
namespace {

constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();

std::vector<std::string> sorted_ids(const std::vector<std::size_t>& idx,
                                    const std::vector<FieldOfStudy>& nodes) {
    std::vector<std::string> out;
    out.reserve(idx.size());
    for (auto i : idx) out.push_back(nodes[i].id);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::string_view to_string(Tier t) {
    return t == Tier::top_level ? "top_level" : "extended";
}

Tier parse_tier(std::string_view s) {
    if (s == "top_level") return Tier::top_level;
    if (s == "extended") return Tier::extended;
    throw Error("unknown tier '" + std::string(s) + "'");
}

std::string slug(std::string_view name) {
    std::string out = text::normalize_name(name);
    std::replace(out.begin(), out.end(), ' ', '-');
    return out;
}

std::string FosGraph::add_fos(FieldOfStudy node) {
    node.name = text::trim(node.name);
    const std::string key = text::normalize_name(node.name);
    if (key.empty()) {
        throw InvariantViolation("field of study needs a non-empty name");
    }
    if (node.id.empty()) {
        node.id = slug(node.name);
        for (int n = 2; by_id_.count(node.id); ++n) {
            node.id = slug(node.name) + "-" + std::to_string(n);
        }
    }
    if (by_id_.count(node.id)) {
        throw DuplicateId("field of study id '" + node.id + "' already exists");
    }

    std::vector<std::string> keys{key};
    std::vector<std::string> synonyms;
    for (const auto& syn : node.synonyms) {
        const std::string k = text::normalize_name(syn);
        if (k.empty() || std::find(keys.begin(), keys.end(), k) != keys.end()) {
            // Variants of the name itself or repeats are not separate synonyms.
            continue;
        }
        keys.push_back(k);
        synonyms.push_back(text::trim(syn));
    }
    node.synonyms = std::move(synonyms);
    for (const auto& k : keys) {
        if (auto it = by_name_.find(k); it != by_name_.end()) {
            throw DuplicateName("'" + k + "' already names field of study '" +
                                nodes_[it->second].id + "'");
        }
    }

    const std::size_t idx = nodes_.size();
    for (const auto& k : keys) by_name_.emplace(k, idx);
    by_id_.emplace(node.id, idx);
    nodes_.push_back(std::move(node));
    parents_.emplace_back();
    children_.emplace_back();
    return nodes_.back().id;
}

void FosGraph::add_synonym(std::string_view id, std::string_view synonym) {
    const std::size_t idx = index_of(id);
    const std::string k = text::normalize_name(synonym);
    if (k.empty()) return;
    if (auto it = by_name_.find(k); it != by_name_.end()) {
        if (it->second == idx) return;
        throw DuplicateName("'" + k + "' already names field of study '" + nodes_[it->second].id + "'");
    }
    by_name_.emplace(k, idx);
    nodes_[idx].synonyms.push_back(text::trim(synonym));
}

void FosGraph::set_description(std::string_view id, std::string description) {
    nodes_[index_of(id)].description = std::move(description);
}

std::size_t FosGraph::index_of(std::string_view id) const {
    auto it = by_id_.find(std::string(id));
    if (it == by_id_.end()) {
        throw UnknownId("unknown field of study '" + std::string(id) + "'");
    }
    return it->second;
}

bool FosGraph::contains(std::string_view id) const {
    return by_id_.count(std::string(id)) != 0;
}

const FieldOfStudy& FosGraph::node(std::string_view id) const {
    return nodes_[index_of(id)];
}

const FieldOfStudy* FosGraph::find(std::string_view id) const {
    auto it = by_id_.find(std::string(id));
    return it == by_id_.end() ? nullptr : &nodes_[it->second];
}

const FieldOfStudy* FosGraph::find_by_name(std::string_view surface) const {
    auto it = by_name_.find(text::normalize_name(surface));
    return it == by_name_.end() ? nullptr : &nodes_[it->second];
}

// True if `to` is `from` or one of its descendants.
bool FosGraph::reaches(std::size_t from, std::size_t to) const {
    std::vector<char> seen(nodes_.size(), 0);
    std::vector<std::size_t> stack{from};
    seen[from] = 1;
    while (!stack.empty()) {
        const auto v = stack.back();
        stack.pop_back();
        if (v == to) return true;
        for (auto c : children_[v]) {
            if (!seen[c]) {
                seen[c] = 1;
                stack.push_back(c);
            }
        }
    }
    return false;
}

bool FosGraph::add_hyponym(std::string_view child, std::string_view parent) {
    if (child == parent) {
        throw SelfLoop("field of study '" + std::string(child) + "' cannot be its own hyponym");
    }
    const std::size_t c = index_of(child);
    const std::size_t p = index_of(parent);
    if (std::find(parents_[c].begin(), parents_[c].end(), p) != parents_[c].end()) {
        return false;
    }
    if (reaches(c, p)) {
        throw CycleError("'" + std::string(parent) + "' is already a hyponym descendant of '" +
                         std::string(child) + "'");
    }
    parents_[c].push_back(p);
    children_[p].push_back(c);
    ++n_edges_;
    return true;
}

std::vector<std::string> FosGraph::parents(std::string_view id) const {
    return sorted_ids(parents_[index_of(id)], nodes_);
}

std::vector<std::string> FosGraph::children(std::string_view id) const {
    return sorted_ids(children_[index_of(id)], nodes_);
}

bool FosGraph::is_first_level(std::string_view id) const {
    const auto i = index_of(id);
    return nodes_[i].tier == Tier::top_level && parents_[i].empty();
}

Subgraph FosGraph::subgraph(std::string_view root, std::size_t depth) const {
    const std::size_t r = index_of(root);
    std::vector<std::size_t> dist(nodes_.size(), kUnset);
    std::deque<std::size_t> queue{r};
    dist[r] = 0;
    std::set<std::size_t> members{r};
    std::set<HyponymEdge> edges;
    while (!queue.empty()) {
        const auto v = queue.front();
        queue.pop_front();
        if (dist[v] >= depth) continue;
        for (auto c : children_[v]) {
            edges.insert({nodes_[c].id, nodes_[v].id});
            members.insert(c);
            if (dist[c] == kUnset) {
                dist[c] = dist[v] + 1;
                queue.push_back(c);
            }
        }
    }
    for (auto p : parents_[r]) {
        members.insert(p);
        edges.insert({nodes_[r].id, nodes_[p].id});
    }

    Subgraph out;
    out.root = nodes_[r].id;
    for (auto m : members) out.nodes.push_back(nodes_[m]);
    std::sort(out.nodes.begin(), out.nodes.end(),
              [](const FieldOfStudy& a, const FieldOfStudy& b) { return a.id < b.id; });
    out.edges.assign(edges.begin(), edges.end());
    return out;
}

std::size_t FosGraph::ideal_steps(std::string_view target) const {
    const std::size_t t = index_of(target);
    std::vector<std::size_t> dist(nodes_.size(), kUnset);
    std::deque<std::size_t> queue;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (nodes_[i].tier == Tier::top_level && parents_[i].empty()) {
            dist[i] = 0;
            queue.push_back(i);
        }
    }
    while (!queue.empty()) {
        const auto v = queue.front();
        queue.pop_front();
        if (v == t) break;
        for (auto c : children_[v]) {
            if (dist[c] == kUnset) {
                dist[c] = dist[v] + 1;
                queue.push_back(c);
            }
        }
    }
    if (dist[t] == kUnset) {
        throw Unreachable("field of study '" + std::string(target) +
                          "' is not reachable from a first-level node");
    }
    return std::max<std::size_t>(1, dist[t]);
}

GraphStats FosGraph::stats() const {
    GraphStats s{nodes_.size(), n_edges_, 0};
    // Longest path in nodes, Kahn order from parentless nodes.
    std::vector<std::size_t> indegree(nodes_.size());
    std::vector<std::size_t> level(nodes_.size(), 1);
    std::vector<std::size_t> ready;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        indegree[i] = parents_[i].size();
        if (indegree[i] == 0) ready.push_back(i);
    }
    while (!ready.empty()) {
        const auto v = ready.back();
        ready.pop_back();
        s.max_depth = std::max(s.max_depth, level[v]);
        for (auto c : children_[v]) {
            level[c] = std::max(level[c], level[v] + 1);
            if (--indegree[c] == 0) ready.push_back(c);
        }
    }
    return s;
}

std::vector<std::string> FosGraph::ids() const {
    std::vector<std::string> out;
    out.reserve(nodes_.size());
    for (const auto& n : nodes_) out.push_back(n.id);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<HyponymEdge> FosGraph::edges() const {
    std::vector<HyponymEdge> out;
    out.reserve(n_edges_);
    for (std::size_t c = 0; c < nodes_.size(); ++c) {
        for (auto p : parents_[c]) out.push_back({nodes_[c].id, nodes_[p].id});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> FosGraph::unrooted() const {
    std::vector<char> seen(nodes_.size(), 0);
    std::vector<std::size_t> stack;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (nodes_[i].tier == Tier::top_level && parents_[i].empty()) {
            seen[i] = 1;
            stack.push_back(i);
        }
    }
    while (!stack.empty()) {
        const auto v = stack.back();
        stack.pop_back();
        for (auto c : children_[v]) {
            if (!seen[c]) {
                seen[c] = 1;
                stack.push_back(c);
            }
        }
    }
    std::vector<std::string> out;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        if (!seen[i]) out.push_back(nodes_[i].id);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace nlpkg::kg

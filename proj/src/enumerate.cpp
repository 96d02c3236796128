#include "arlab/enumerate.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_set>

#include "arlab/canonical.hpp"
#include "arlab/errors.hpp"
#include "arlab/matching.hpp"

namespace arlab {

namespace {

// Every isolated-free graph on v' > v vertices arises from an isolated-free
// graph on some smaller vertex count by adding one vertex x adjacent to a
// subset of the old vertices plus t fresh leaves: removing any vertex and
// stripping the newly isolated ones inverts the step. Level-wise generation
// over this augmentation with canonical dedup is therefore complete.
struct Level {
    std::map<CanonicalForm, Graph> classes;
};

struct MultisetBounds {
    // prefix_drop[r] = sum of the r largest target degrees
    std::vector<long long> prefix_drop;
    long long target_edges = 0;
    int target_order = 0;
    int min_degree = 0;
};

bool multiset_prune_ok(const Graph& g, const std::vector<int>& target,
                       const MultisetBounds& b) {
    int v = g.order();
    if (v > b.target_order) return false;
    int removed = b.target_order - v;
    // a stripped induced subgraph of the target loses at most the removed
    // vertices' final degrees worth of edges
    if (g.edge_count() < b.target_edges - b.prefix_drop[std::min<std::size_t>(
                             removed, b.prefix_drop.size() - 1)])
        return false;
    auto deg = g.degree_multiset();
    for (std::size_t i = 0; i < deg.size(); ++i) {
        if (deg[i] > target[i]) return false; // sorted domination
    }
    if (v >= 2) {
        int lower = b.min_degree - removed;
        if (lower > 1 && g.min_degree() < lower) return false;
    }
    return true;
}

bool satisfies_final(const Graph& g, const EnumConstraints& c) {
    if (c.exact_edges && g.edge_count() != *c.exact_edges) return false;
    if (c.degree_multiset) {
        if (g.order() != static_cast<int>(c.degree_multiset->size())) return false;
        if (g.degree_multiset() != *c.degree_multiset) return false;
    }
    return true;
}

} // namespace

EnumStats enumerate_graphs(const EnumConstraints& c,
                           const std::function<void(const Graph&)>& visit) {
    EnumStats stats;
    int cap = c.max_vertices;
    if (cap < 0) throw std::invalid_argument("max_vertices must be non-negative");

    std::optional<std::vector<int>> target = c.degree_multiset;
    MultisetBounds mb;
    if (target) {
        std::sort(target->begin(), target->end(), std::greater<int>());
        if (!target->empty() && target->back() < 1)
            throw std::invalid_argument("degree multiset entries must be >= 1");
        mb.target_order = static_cast<int>(target->size());
        cap = std::min(cap, mb.target_order);
        long long sum = 0;
        mb.prefix_drop.push_back(0);
        for (int d : *target) {
            sum += d;
            mb.prefix_drop.push_back(mb.prefix_drop.back() + d);
        }
        if (sum % 2 != 0) return stats; // no graph has an odd degree sum
        mb.target_edges = sum / 2;
        mb.min_degree = target->empty() ? 0 : target->back();
    }
    int max_new_degree = cap;
    if (c.max_degree) max_new_degree = std::min(max_new_degree, *c.max_degree);
    if (target && !target->empty()) max_new_degree = std::min(max_new_degree, target->front());

    std::vector<Level> levels(cap + 1);
    std::unordered_set<std::string> seen;
    {
        Graph empty(0);
        levels[0].classes.emplace(canonical_form(empty), empty);
    }

    auto admissible = [&](const Graph& g) {
        if (c.max_degree && g.max_degree() > *c.max_degree) return false;
        if (c.exact_edges && g.edge_count() > *c.exact_edges) return false;
        if (target && !multiset_prune_ok(g, *target, mb)) return false;
        if (c.max_matching && matching_number(g) > *c.max_matching) return false;
        if (c.prune_admissible && !c.prune_admissible(g)) return false;
        return true;
    };

    for (int v = 0; v <= cap; ++v) {
        for (const auto& [form, g] : levels[v].classes) {
            if (satisfies_final(g, c)) {
                ++stats.classes;
                visit(g);
            }
            // children: new vertex adjacent to a subset of V(g) and to t
            // fresh leaves
            std::vector<int> verts(v);
            for (int i = 0; i < v; ++i) verts[i] = i;
            std::vector<int> subset;
            auto expand = [&](const std::vector<int>& s0) {
                int max_t = std::min(cap - v - 1, max_new_degree - static_cast<int>(s0.size()));
                for (int t = (s0.empty() ? 1 : 0); t <= max_t; ++t) {
                    ++stats.candidates;
                    if (c.candidate_cap >= 0 && stats.candidates > c.candidate_cap)
                        throw capped_error("enumeration candidate budget exceeded");
                    int child_n = v + 1 + t;
                    Graph child(child_n);
                    for (const Edge& e : g.edges()) child.add_edge(e.u, e.v);
                    int x = v;
                    for (int w : s0) child.add_edge(x, w);
                    for (int leaf = 0; leaf < t; ++leaf) child.add_edge(x, v + 1 + leaf);
                    if (!admissible(child)) continue;
                    CanonicalForm f = canonical_form(child);
                    if (seen.insert(f).second)
                        levels[child_n].classes.emplace(std::move(f), std::move(child));
                }
            };
            // iterate subsets of size <= max_new_degree
            std::function<void(int)> rec = [&](int next) {
                expand(subset);
                if (static_cast<int>(subset.size()) >= max_new_degree) return;
                for (int i = next; i < v; ++i) {
                    subset.push_back(i);
                    rec(i + 1);
                    subset.pop_back();
                }
            };
            rec(0);
        }
    }
    return stats;
}

std::vector<Graph> graphs_with_degree_multiset(std::vector<int> multiset) {
    std::sort(multiset.begin(), multiset.end(), std::greater<int>());
    EnumConstraints c;
    c.max_vertices = static_cast<int>(multiset.size());
    c.max_degree = multiset.empty() ? 0 : multiset.front();
    c.degree_multiset = multiset;
    std::vector<Graph> out;
    enumerate_graphs(c, [&](const Graph& g) { out.push_back(g); });
    return out;
}

} // namespace arlab

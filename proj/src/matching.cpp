#include "arlab/matching.hpp"

#include <algorithm>
#include <queue>

#include "arlab/errors.hpp"

namespace arlab {

bool is_matching_of(const Graph& g, const Matching& m) {
    Bitset used(g.order());
    for (const Edge& e : m) {
        if (e.u < 0 || e.v >= g.order() || !g.has_edge(e.u, e.v)) return false;
        if (used.test(e.u) || used.test(e.v)) return false;
        used.set(e.u);
        used.set(e.v);
    }
    return true;
}

namespace {

// Edmonds' maximum cardinality matching with blossom contraction.
class BlossomMatcher {
public:
    explicit BlossomMatcher(const Graph& g)
        : g_(g), n_(g.order()), match_(n_, -1), parent_(n_), base_(n_), used_(n_), blossom_(n_) {}

    std::vector<int> run() {
        for (int v = 0; v < n_; ++v)
            if (match_[v] == -1) find_augmenting_path(v);
        return match_;
    }

private:
    const Graph& g_;
    int n_;
    std::vector<int> match_, parent_, base_;
    std::vector<char> used_, blossom_;

    int lca(int a, int b) {
        std::vector<char> anc(n_, 0);
        int v = a;
        while (true) {
            v = base_[v];
            anc[v] = 1;
            if (match_[v] == -1) break;
            v = parent_[match_[v]];
        }
        v = b;
        while (true) {
            v = base_[v];
            if (anc[v]) return v;
            v = parent_[match_[v]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[v] != b) {
            blossom_[base_[v]] = 1;
            blossom_[base_[match_[v]]] = 1;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    void find_augmenting_path(int root) {
        std::fill(used_.begin(), used_.end(), 0);
        std::fill(parent_.begin(), parent_.end(), -1);
        for (int i = 0; i < n_; ++i) base_[i] = i;

        used_[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to = g_.neighbors(v).find_first(); to != -1; to = g_.neighbors(v).find_next(to)) {
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] != -1 && parent_[match_[to]] != -1)) {
                    // odd cycle: contract the blossom
                    int b = lca(v, to);
                    std::fill(blossom_.begin(), blossom_.end(), 0);
                    mark_path(v, b, to);
                    mark_path(to, b, v);
                    for (int i = 0; i < n_; ++i) {
                        if (blossom_[base_[i]]) {
                            base_[i] = b;
                            if (!used_[i]) {
                                used_[i] = 1;
                                q.push(i);
                            }
                        }
                    }
                } else if (parent_[to] == -1) {
                    parent_[to] = v;
                    if (match_[to] == -1) {
                        // augment along root..to
                        int u = to;
                        while (u != -1) {
                            int pv = parent_[u], ppv = match_[pv];
                            match_[u] = pv;
                            match_[pv] = u;
                            u = ppv;
                        }
                        return;
                    }
                    used_[match_[to]] = 1;
                    q.push(match_[to]);
                }
            }
        }
    }
};

} // namespace

Matching maximum_matching(const Graph& g) {
    std::vector<int> mate = BlossomMatcher(g).run();
    Matching m;
    for (int v = 0; v < g.order(); ++v)
        if (mate[v] > v) m.emplace_back(v, mate[v]);
    std::sort(m.begin(), m.end());
    return m;
}

int matching_number(const Graph& g) { return static_cast<int>(maximum_matching(g).size()); }

bool has_perfect_matching(const Graph& g) {
    return g.order() % 2 == 0 && matching_number(g) == g.order() / 2;
}

namespace {

void enumerate_matchings(const Graph& g, int first, Matching& cur, int target,
                         std::vector<Matching>& out, std::size_t cap) {
    int v = first;
    while (v < g.order()) {
        // skip vertices that cannot start a new matching edge
        bool used = false;
        for (const Edge& e : cur)
            if (e.u == v || e.v == v) { used = true; break; }
        if (!used && g.neighbors(v).any()) break;
        ++v;
    }
    if (v >= g.order()) {
        if (static_cast<int>(cur.size()) == target) {
            if (out.size() >= cap) throw capped_error("too many maximum matchings");
            out.push_back(cur);
        }
        return;
    }
    if (static_cast<int>(cur.size()) + (g.order() - v) / 2 < target) return;
    Bitset taken(g.order());
    for (const Edge& e : cur) {
        taken.set(e.u);
        taken.set(e.v);
    }
    // match v with each free higher neighbor; lower partners were decided
    // when they were the branching vertex
    g.neighbors(v).for_each([&](int w) {
        if (w > v && !taken.test(w)) {
            cur.emplace_back(v, w);
            enumerate_matchings(g, v + 1, cur, target, out, cap);
            cur.pop_back();
        }
    });
    // or leave v unmatched for good
    enumerate_matchings(g, v + 1, cur, target, out, cap);
}

} // namespace

std::vector<Matching> all_maximum_matchings(const Graph& g, std::size_t cap) {
    int target = matching_number(g);
    std::vector<Matching> out;
    Matching cur;
    enumerate_matchings(g, 0, cur, target, out, cap);
    for (auto& m : out) std::sort(m.begin(), m.end());
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<Matching> near_perfect_matching(const Graph& g, std::optional<int> avoid) {
    if (g.order() % 2 == 0) return std::nullopt;
    auto try_without = [&](int v) -> std::optional<Matching> {
        std::vector<int> keep;
        for (int u = 0; u < g.order(); ++u)
            if (u != v) keep.push_back(u);
        Graph h = g.induced(keep);
        if (!has_perfect_matching(h)) return std::nullopt;
        Matching m;
        for (const Edge& e : maximum_matching(h)) m.emplace_back(keep[e.u], keep[e.v]);
        std::sort(m.begin(), m.end());
        return m;
    };
    if (avoid) return try_without(*avoid);
    for (int v = 0; v < g.order(); ++v)
        if (auto m = try_without(v)) return m;
    return std::nullopt;
}

bool is_factor_critical(const Graph& g) {
    if (g.order() % 2 == 0) return false;
    for (int v = 0; v < g.order(); ++v)
        if (!near_perfect_matching(g, v)) return false;
    return true;
}

std::optional<std::vector<int>> tutte_violator(const Graph& g) {
    if (has_perfect_matching(g)) return std::nullopt;
    int n = g.order();
    // Increasing-size subset search; past desk scale fall back to the
    // neighborhood set A of the canonical decomposition, which always
    // violates the condition when no perfect matching exists.
    if (n <= 22) {
        std::vector<int> subset;
        for (int size = 0; size <= n; ++size) {
            subset.assign(size, 0);
            // lexicographic combinations of {0..n-1} of given size
            for (int i = 0; i < size; ++i) subset[i] = i;
            while (true) {
                if (g.odd_components(subset) > size) return subset;
                int i = size - 1;
                while (i >= 0 && subset[i] == n - size + i) --i;
                if (i < 0) break;
                ++subset[i];
                for (int j = i + 1; j < size; ++j) subset[j] = subset[j - 1] + 1;
            }
        }
        return std::nullopt; // unreachable: Tutte guarantees a violator
    }
    GEDecomposition d = gallai_edmonds(g);
    return d.a;
}

std::vector<int> GEDecomposition::d_vertices() const {
    std::vector<int> all;
    for (const auto& comp : d_components) all.insert(all.end(), comp.begin(), comp.end());
    std::sort(all.begin(), all.end());
    return all;
}

GEDecomposition gallai_edmonds(const Graph& g) {
    int n = g.order();
    int nu = matching_number(g);
    Bitset in_d(n);
    for (int v = 0; v < n; ++v) {
        Graph gv = g.remove_vertices({v});
        if (matching_number(gv) == nu) in_d.set(v); // some maximum matching misses v
    }
    GEDecomposition d;
    Bitset in_a(n);
    for (int v = 0; v < n; ++v) {
        if (in_d.test(v)) continue;
        if (g.neighbors(v).intersects(in_d)) {
            in_a.set(v);
            d.a.push_back(v);
        } else {
            d.c.push_back(v);
        }
    }
    // split D into components of G[D]
    std::vector<int> dverts = in_d.to_vector();
    Graph gd = g.induced(dverts);
    for (const auto& comp : gd.components()) {
        std::vector<int> orig;
        for (int i : comp) orig.push_back(dverts[i]);
        d.d_components.push_back(orig);
    }
    return d;
}

bool verify_ge(const Graph& g, const GEDecomposition& d, std::size_t matching_cap) {
    int n = g.order();
    // partition and A/C consistency
    Bitset in_d(n), in_a(n), in_c(n);
    for (const auto& comp : d.d_components)
        for (int v : comp) {
            if (v < 0 || v >= n || in_d.test(v)) return false;
            in_d.set(v);
        }
    for (int v : d.a) {
        if (v < 0 || v >= n || in_d.test(v) || in_a.test(v)) return false;
        in_a.set(v);
    }
    for (int v : d.c) {
        if (v < 0 || v >= n || in_d.test(v) || in_a.test(v) || in_c.test(v)) return false;
        in_c.set(v);
    }
    if (in_d.count() + in_a.count() + in_c.count() != n) return false;
    for (int v = 0; v < n; ++v) {
        if (in_d.test(v)) continue;
        bool touches_d = g.neighbors(v).intersects(in_d);
        if (touches_d != in_a.test(v)) return false;
    }
    // each listed D-component must be connected and factor-critical
    std::vector<int> comp_of(n, -1);
    for (std::size_t i = 0; i < d.d_components.size(); ++i) {
        const auto& comp = d.d_components[i];
        Graph h = g.induced(comp);
        if (!h.is_connected()) return false;
        if (!is_factor_critical(h)) return false;
        for (int v : comp) comp_of[v] = static_cast<int>(i);
    }
    // no edges between distinct D-components (they must be the components
    // of G[D])
    for (const Edge& e : g.edges()) {
        if (in_d.test(e.u) && in_d.test(e.v) && comp_of[e.u] != comp_of[e.v]) return false;
    }
    // C induces a perfectly matchable subgraph
    if (!d.c.empty() && !has_perfect_matching(g.induced(d.c))) return false;
    // matching-number identity
    long long expected = static_cast<long long>(d.a.size()) + static_cast<long long>(d.c.size()) / 2;
    for (const auto& comp : d.d_components) expected += (static_cast<long long>(comp.size()) - 1) / 2;
    if (matching_number(g) != expected) return false;
    // every maximum matching: near-perfect on each D-component, perfect on
    // C, A matched into distinct D-components
    for (const Matching& m : all_maximum_matchings(g, matching_cap)) {
        std::vector<int> mate(n, -1);
        for (const Edge& e : m) {
            mate[e.u] = e.v;
            mate[e.v] = e.u;
        }
        for (int v : d.c)
            if (mate[v] == -1 || !in_c.test(mate[v])) return false;
        std::vector<char> comp_hit(d.d_components.size(), 0);
        for (int v : d.a) {
            if (mate[v] == -1 || !in_d.test(mate[v])) return false;
            int ci = comp_of[mate[v]];
            if (comp_hit[ci]) return false;
            comp_hit[ci] = 1;
        }
        for (std::size_t i = 0; i < d.d_components.size(); ++i) {
            const auto& comp = d.d_components[i];
            int internal = 0, external = 0, exposed = 0;
            for (int v : comp) {
                if (mate[v] == -1) ++exposed;
                else if (comp_of[mate[v]] == static_cast<int>(i)) ++internal;
                else ++external;
            }
            if (internal != static_cast<int>(comp.size()) - 1) return false;
            if (exposed + external != 1) return false;
        }
    }
    return true;
}

std::optional<FanEmbedding> contains_friendship(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("friendship pattern needs k >= 1");
    for (int center = 0; center < g.order(); ++center) {
        if (g.degree(center) < 2 * k) continue;
        std::vector<int> nbrs = g.neighbors(center).to_vector();
        Graph h = g.induced(nbrs);
        Matching m = maximum_matching(h);
        if (static_cast<int>(m.size()) < k) continue;
        FanEmbedding emb;
        emb.center = center;
        for (int i = 0; i < k; ++i) emb.pairs.emplace_back(nbrs[m[i].u], nbrs[m[i].v]);
        return emb;
    }
    return std::nullopt;
}

} // namespace arlab

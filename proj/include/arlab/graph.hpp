#ifndef ARLAB_GRAPH_HPP
#define ARLAB_GRAPH_HPP

#include <optional>
#include <vector>

#include "arlab/bitset.hpp"

namespace arlab {

// Unordered edge, stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;
    Edge() = default;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}
    bool operator==(const Edge&) const = default;
    friend bool operator<(const Edge& a, const Edge& b) {
        return a.u != b.u ? a.u < b.u : a.v < b.v;
    }
};

// Finite simple graph on vertices 0..n-1 with per-vertex neighbor bitsets.
// Adjacency is kept symmetric and loop-free by construction.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    int order() const { return n_; }
    long long edge_count() const { return m_; }

    bool has_edge(int u, int v) const { return u != v && adj_[u].test(v); }
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    const Bitset& neighbors(int v) const { return adj_[v]; }

    int degree(int v) const { return adj_[v].count(); }
    int max_degree() const;
    int min_degree() const;
    std::vector<int> degrees() const;
    std::vector<int> degree_multiset() const; // sorted descending

    std::vector<Edge> edges() const; // sorted by (u, v)

    std::vector<int> non_isolated_vertices() const;
    // Isomorphic copy with isolated vertices removed; kept vertices keep
    // their relative order.
    Graph strip_isolated() const;

    // --- constructors for the standard graphs used throughout ---
    static Graph empty_graph(int n);
    static Graph complete(int n);
    static Graph complete_bipartite(int a, int b);
    static Graph turan(int n, int p);
    static Graph friendship(int k); // k triangles glued at vertex 0
    static Graph cycle(int n);
    static Graph path(int n);

    // --- the G-X / G-Y / G+Y / G[X] operations ---
    // Kept vertices are relabeled in ascending original order; the caller
    // maps back through the sorted complement/selection.
    Graph remove_vertices(const std::vector<int>& xs) const;
    Graph remove_edges(const std::vector<Edge>& ys) const;
    Graph add_edges(const std::vector<Edge>& ys) const;
    // New vertex i corresponds to keep[i] (keep must be sorted, distinct).
    Graph induced(const std::vector<int>& keep) const;

    Graph complement() const;
    // Relabeled copy: vertex i of the result is perm[i] of the original.
    Graph relabeled(const std::vector<int>& perm) const;

    std::vector<std::vector<int>> components() const;
    bool is_connected() const;
    // Two-colorable test; side receives one side of a proper 2-coloring
    // (per component the lowest vertex goes to the left side).
    bool is_bipartite(std::vector<int>* side = nullptr) const;

    // Number of odd-order components of G - removed.
    int odd_components(const std::vector<int>& removed) const;

    bool contains_triangle() const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    long long m_ = 0;
    std::vector<Bitset> adj_;
    void check_vertex(int v) const;
};

Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);

// A rainbow-agnostic friendship-graph embedding: center plus k disjoint
// adjacent pairs inside its neighborhood.
struct FanEmbedding {
    int center = -1;
    std::vector<Edge> pairs;
};

// Exact test for a k-fan subgraph (k triangles sharing exactly the center).
// Uses a maximum matching inside each neighborhood.
std::optional<FanEmbedding> contains_friendship(const Graph& g, int k);

} // namespace arlab

#endif

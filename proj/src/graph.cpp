#include "arlab/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace arlab {

Graph::Graph(int n) : n_(n), adj_(n, Bitset(n)) {
    if (n < 0) throw std::invalid_argument("graph order must be non-negative");
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex index out of range");
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    if (adj_[u].test(v)) return;
    adj_[u].set(v);
    adj_[v].set(u);
    ++m_;
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v || !adj_[u].test(v)) return;
    adj_[u].reset(v);
    adj_[v].reset(u);
    --m_;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int d = degree(0);
    for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = degree(v);
    return d;
}

std::vector<int> Graph::degree_multiset() const {
    auto d = degrees();
    std::sort(d.begin(), d.end(), std::greater<int>());
    return d;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> es;
    es.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u) {
        for (int v = adj_[u].find_next(u); v != -1; v = adj_[u].find_next(v))
            es.emplace_back(u, v);
    }
    return es;
}

std::vector<int> Graph::non_isolated_vertices() const {
    std::vector<int> keep;
    for (int v = 0; v < n_; ++v)
        if (adj_[v].any()) keep.push_back(v);
    return keep;
}

Graph Graph::strip_isolated() const { return induced(non_isolated_vertices()); }

Graph Graph::empty_graph(int n) { return Graph(n); }

Graph Graph::complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph Graph::complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) g.add_edge(u, v);
    return g;
}

Graph Graph::turan(int n, int p) {
    if (p < 1 || p > n) throw std::invalid_argument("turan graph needs 1 <= p <= n");
    // part of vertex v: parts are consecutive index ranges, the first
    // n mod p parts get the extra vertex
    std::vector<int> part(n);
    int q = n / p, r = n % p, v = 0;
    for (int i = 0; i < p; ++i) {
        int size = q + (i < r ? 1 : 0);
        for (int j = 0; j < size; ++j) part[v++] = i;
    }
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int w = u + 1; w < n; ++w)
            if (part[u] != part[w]) g.add_edge(u, w);
    return g;
}

Graph Graph::friendship(int k) {
    if (k < 1) throw std::invalid_argument("friendship graph needs k >= 1");
    Graph g(2 * k + 1);
    for (int i = 0; i < k; ++i) {
        int a = 1 + 2 * i, b = 2 + 2 * i;
        g.add_edge(0, a);
        g.add_edge(0, b);
        g.add_edge(a, b);
    }
    return g;
}

Graph Graph::cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph Graph::path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph Graph::remove_vertices(const std::vector<int>& xs) const {
    Bitset drop(n_);
    for (int v : xs) {
        check_vertex(v);
        drop.set(v);
    }
    std::vector<int> keep;
    for (int v = 0; v < n_; ++v)
        if (!drop.test(v)) keep.push_back(v);
    return induced(keep);
}

Graph Graph::remove_edges(const std::vector<Edge>& ys) const {
    Graph g = *this;
    for (const Edge& e : ys) g.remove_edge(e.u, e.v);
    return g;
}

Graph Graph::add_edges(const std::vector<Edge>& ys) const {
    Graph g = *this;
    for (const Edge& e : ys) g.add_edge(e.u, e.v);
    return g;
}

Graph Graph::induced(const std::vector<int>& keep) const {
    Graph g(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i) check_vertex(keep[i]);
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (has_edge(keep[i], keep[j])) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

Graph Graph::complement() const {
    Graph g(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!has_edge(u, v)) g.add_edge(u, v);
    return g;
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
    Graph g(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (has_edge(perm[i], perm[j])) g.add_edge(i, j);
    return g;
}

std::vector<std::vector<int>> Graph::components() const {
    std::vector<std::vector<int>> comps;
    Bitset seen(n_);
    for (int s = 0; s < n_; ++s) {
        if (seen.test(s)) continue;
        std::vector<int> comp{s};
        seen.set(s);
        for (std::size_t head = 0; head < comp.size(); ++head) {
            adj_[comp[head]].for_each([&](int w) {
                if (!seen.test(w)) {
                    seen.set(w);
                    comp.push_back(w);
                }
            });
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool Graph::is_connected() const { return n_ <= 1 || components().size() == 1; }

bool Graph::is_bipartite(std::vector<int>* side) const {
    std::vector<int> color(n_, -1);
    std::vector<int> stack;
    for (int s = 0; s < n_; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            bool odd = false;
            adj_[v].for_each([&](int w) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    odd = true;
                }
            });
            if (odd) return false;
        }
    }
    if (side) *side = color;
    return true;
}

int Graph::odd_components(const std::vector<int>& removed) const {
    Bitset drop(n_);
    for (int v : removed) {
        check_vertex(v);
        drop.set(v);
    }
    int odd = 0;
    Bitset seen(n_);
    for (int s = 0; s < n_; ++s) {
        if (drop.test(s) || seen.test(s)) continue;
        std::vector<int> comp{s};
        seen.set(s);
        for (std::size_t head = 0; head < comp.size(); ++head) {
            adj_[comp[head]].for_each([&](int w) {
                if (!drop.test(w) && !seen.test(w)) {
                    seen.set(w);
                    comp.push_back(w);
                }
            });
        }
        if (comp.size() % 2 == 1) ++odd;
    }
    return odd;
}

bool Graph::contains_triangle() const {
    for (int u = 0; u < n_; ++u) {
        for (int v = adj_[u].find_next(u); v != -1; v = adj_[u].find_next(v)) {
            if ((adj_[u] & adj_[v]).any()) return true;
        }
    }
    return false;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    Graph r(g.order() + h.order());
    for (const Edge& e : g.edges()) r.add_edge(e.u, e.v);
    int off = g.order();
    for (const Edge& e : h.edges()) r.add_edge(e.u + off, e.v + off);
    return r;
}

Graph join(const Graph& g, const Graph& h) {
    Graph r = disjoint_union(g, h);
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < h.order(); ++v) r.add_edge(u, g.order() + v);
    return r;
}

} // namespace arlab

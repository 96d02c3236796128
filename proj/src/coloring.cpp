#include "arlab/coloring.hpp"

#include <algorithm>
#include <stdexcept>

#include "arlab/extremal.hpp"

namespace arlab {

EdgeColoring::EdgeColoring(int n) : n_(n), r_(n >= 2 ? 1 : 0) {
    if (n < 0) throw std::invalid_argument("host order must be non-negative");
    color_.assign(static_cast<std::size_t>(edge_total()), 1);
}

std::size_t EdgeColoring::index(int u, int v) const {
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n_ || u == v) throw std::invalid_argument("bad edge for coloring");
    return static_cast<std::size_t>(u) * (2 * n_ - u - 1) / 2 + (v - u - 1);
}

void EdgeColoring::set_color(int u, int v, int c) {
    if (c < 1 || c > edge_total()) throw std::invalid_argument("color out of range");
    color_[index(u, v)] = c;
    recount();
}

void EdgeColoring::recount() {
    std::vector<char> seen(color_.size() + 2, 0);
    int distinct = 0;
    for (int c : color_)
        if (!seen[c]) {
            seen[c] = 1;
            ++distinct;
        }
    r_ = distinct;
}

void EdgeColoring::normalize() {
    std::vector<int> rename(color_.size() + 2, 0);
    int next = 0;
    for (int& c : color_) {
        if (!rename[c]) rename[c] = ++next;
        c = rename[c];
    }
    r_ = next;
}

std::vector<std::vector<Edge>> EdgeColoring::color_classes() const {
    std::vector<std::vector<Edge>> classes(r_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v) {
            int c = color(u, v);
            if (c < 1 || c > r_)
                throw std::logic_error("coloring not normalized; call normalize()");
            classes[c - 1].emplace_back(u, v);
        }
    return classes;
}

nlohmann::ordered_json EdgeColoring::to_json() const {
    nlohmann::ordered_json j;
    j["n"] = n_;
    j["r"] = r_;
    auto rows = nlohmann::ordered_json::array();
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v) rows.push_back({u, v, color(u, v)});
    j["edges"] = std::move(rows);
    return j;
}

EdgeColoring EdgeColoring::from_json(const nlohmann::json& j) {
    EdgeColoring c(j.at("n").get<int>());
    long long rows = 0;
    for (const auto& row : j.at("edges")) {
        if (!row.is_array() || row.size() != 3) throw std::invalid_argument("bad coloring row");
        c.set_color(row[0].get<int>(), row[1].get<int>(), row[2].get<int>());
        ++rows;
    }
    if (rows != c.edge_total())
        throw std::invalid_argument("coloring must assign every edge of the host");
    c.recount();
    for (int col : c.color_)
        if (col > c.r_)
            throw std::invalid_argument("colors must be the contiguous range 1..r");
    if (j.contains("r") && j.at("r").get<int>() != c.colors_used())
        throw std::invalid_argument("declared color count does not match the assignment");
    return c;
}

EdgeColoring all_rainbow(int n) {
    EdgeColoring c(n);
    int next = 1;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) c.set_color(u, v, next++);
    return c;
}

EdgeColoring monochromatic(int n) { return EdgeColoring(n); }

namespace {

// rainbow colors 1..e(support) on the support edges, one filler color on
// the rest of K_n
EdgeColoring support_plus_filler(int n, const Graph& support) {
    EdgeColoring c(n);
    std::vector<Edge> edges = support.edges();
    int filler = static_cast<int>(edges.size()) + 1;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) c.set_color(u, v, filler);
    int next = 1;
    for (const Edge& e : edges) c.set_color(e.u, e.v, next++);
    return c;
}

} // namespace

EdgeColoring coloring_k2_star(int n) {
    if (n < 4) throw std::invalid_argument("this coloring needs n >= 4");
    EdgeColoring c(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) c.set_color(u, v, 3);
    c.set_color(0, 1, 1);
    for (int v = 2; v < n; ++v) c.set_color(0, v, 2);
    return c;
}

EdgeColoring coloring_two_cliques(int n, int k) {
    if (k < 3 || k % 2 == 0) throw std::invalid_argument("this coloring needs odd k >= 3");
    if (n < 2 * k) throw std::invalid_argument("host needs n >= 2k");
    Graph support(n);
    for (int block = 0; block < 2; ++block)
        for (int u = 0; u < k; ++u)
            for (int v = u + 1; v < k; ++v) support.add_edge(block * k + u, block * k + v);
    return support_plus_filler(n, support);
}

EdgeColoring coloring_clique_plus_C(int n, int k) {
    if (k < 4 || k % 2 != 0) throw std::invalid_argument("this coloring needs even k >= 4");
    if (n < 2 * k) throw std::invalid_argument("host needs n >= 2k");
    Graph block = build_D_k_member(k); // K_{k-1} u C' on 2k vertices
    Graph support(n);
    for (const Edge& e : block.edges()) support.add_edge(e.u, e.v);
    return support_plus_filler(n, support);
}

EdgeColoring coloring_lower_friendship(int n, int k) {
    Graph extremal = build_EX_friendship(n, k);
    return support_plus_filler(n, extremal);
}

Graph representative_rainbow_subgraph(const EdgeColoring& c, RepresentativePick pick) {
    (void)pick; // single deterministic rule for now
    Graph g(c.host_order());
    for (const auto& cls : c.color_classes()) {
        const Edge& e = cls.front(); // classes are sorted by (u, v)
        g.add_edge(e.u, e.v);
    }
    return g;
}

EdgeColoring parse_coloring(const std::string& text) {
    return EdgeColoring::from_json(nlohmann::json::parse(text));
}

} // namespace arlab

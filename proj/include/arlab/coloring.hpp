#ifndef ARLAB_COLORING_HPP
#define ARLAB_COLORING_HPP

#include <vector>

#include <json.hpp>

#include "arlab/graph.hpp"

namespace arlab {

// Total edge-coloring of K_n. Colors are contiguous integers 1..r and
// every color occurs (surjectivity is re-established by normalize()).
class EdgeColoring {
public:
    EdgeColoring() = default;
    // All edges start with color 1 (r = 1 for n >= 2).
    explicit EdgeColoring(int n);

    int host_order() const { return n_; }
    long long edge_total() const { return static_cast<long long>(n_) * (n_ - 1) / 2; }
    int colors_used() const { return r_; }

    int color(int u, int v) const { return color_[index(u, v)]; }
    // Colors must stay within 1..edge_total(); call normalize() afterwards
    // if the assignment might leave gaps.
    void set_color(int u, int v, int c);

    // Renames colors to 1..r in order of first appearance along the edge
    // list (idempotent).
    void normalize();

    // Classes indexed by color-1; each class sorted by (u, v).
    std::vector<std::vector<Edge>> color_classes() const;

    nlohmann::ordered_json to_json() const;
    static EdgeColoring from_json(const nlohmann::json& j);

    bool operator==(const EdgeColoring&) const = default;

private:
    int n_ = 0;
    int r_ = 0;
    std::vector<int> color_;
    std::size_t index(int u, int v) const;
    void recount();
};

EdgeColoring all_rainbow(int n);      // every edge its own color
EdgeColoring monochromatic(int n);    // single color

// Lower-bound constructions. Each uses a rainbow support plus one filler
// color on the remaining edges of K_n, support colors assigned in edge
// order on the lowest-indexed vertices.

// 3 colors: edge {0,1}, the star at 0, everything else.
EdgeColoring coloring_k2_star(int n);
// Two disjoint rainbow K_k (odd k >= 3): k^2-k+1 colors.
EdgeColoring coloring_two_cliques(int n, int k);
// Rainbow K_{k-1} plus nearly (k-1)-regular factor-critical block of order
// k+1 (even k >= 4): k^2-3k/2+1 colors.
EdgeColoring coloring_clique_plus_C(int n, int k);
// Rainbow fan-free extremal graph plus filler: ex(n, F_k)+1 colors.
EdgeColoring coloring_lower_friendship(int n, int k);

enum class RepresentativePick { LexSmallestEdge };

// One edge per color class (r edges in total).
Graph representative_rainbow_subgraph(const EdgeColoring& c,
                                      RepresentativePick pick = RepresentativePick::LexSmallestEdge);

EdgeColoring parse_coloring(const std::string& text);

} // namespace arlab

#endif

#ifndef ARLAB_MATCHING_HPP
#define ARLAB_MATCHING_HPP

#include <optional>
#include <vector>

#include "arlab/graph.hpp"

namespace arlab {

using Matching = std::vector<Edge>; // pairwise disjoint edges, sorted

bool is_matching_of(const Graph& g, const Matching& m);

// Exact maximum matching via Edmonds' blossom contraction, O(n^3).
// Deterministic for a fixed input.
Matching maximum_matching(const Graph& g);
int matching_number(const Graph& g);

bool has_perfect_matching(const Graph& g);

// All matchings of maximum size. Throws capped_error beyond `cap` results.
std::vector<Matching> all_maximum_matchings(const Graph& g, std::size_t cap = 2'000'000);

// Matching covering all but exactly one vertex (the requested one, if given).
std::optional<Matching> near_perfect_matching(const Graph& g, std::optional<int> avoid = std::nullopt);

bool is_factor_critical(const Graph& g);

// Vertex set T with more odd components in G-T than |T|, which exists
// exactly when G has no perfect matching. Smallest such set, found by
// subset search in increasing size at desk scale.
std::optional<std::vector<int>> tutte_violator(const Graph& g);

// Canonical decomposition of V(G): D = vertices missed by some maximum
// matching (split into components), A = outside neighbors of D, C = rest.
struct GEDecomposition {
    std::vector<std::vector<int>> d_components;
    std::vector<int> a;
    std::vector<int> c;

    std::vector<int> d_vertices() const;
};

GEDecomposition gallai_edmonds(const Graph& g);

// Structural check of a candidate decomposition:
//  - partitions V(G), with A/C consistent with D,
//  - every D-component factor-critical, C perfectly matchable,
//  - every maximum matching is near-perfect on each D-component, perfect
//    on C, and matches A into distinct D-components,
//  - nu(G) = |A| + |C|/2 + sum (|C_i|-1)/2.
bool verify_ge(const Graph& g, const GEDecomposition& d,
               std::size_t matching_cap = 2'000'000);

} // namespace arlab

#endif

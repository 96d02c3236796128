#ifndef ARLAB_EXTREMAL_HPP
#define ARLAB_EXTREMAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "arlab/graph.hpp"

namespace arlab {

// Maximum edge count over graphs with matching number <= nu and maximum
// degree <= delta (Chvatal-Hanson): nu*delta + floor(delta/2)*floor(nu/ceil(delta/2)).
long long f_formula(int nu, int delta);

// A closed-form value together with whether the parameters lie inside the
// range for which the formula is proven. Outside the range the value is
// still computed, flagged rather than rejected, so oracles can probe it.
struct FormulaValue {
    long long value = 0;
    bool in_proven_range = true;
};

// Turan number of the triangle: floor(n^2/4), n >= 3.
long long ex_triangle(int n);

// Turan number of the k-fan F_k for k >= 2 (proven for n >= 50k^2; the
// k = 2 case holds for all n >= 5).
FormulaValue ex_friendship(int n, int k);

// Anti-Ramsey number of {K_{1,k+1}, (k+1)K_2} for k >= 2 (proven n >= 3k^2).
FormulaValue ar_star_matching(int n, int k);

// Anti-Ramsey number of the (k+1)-fan for k >= 1 (proven n >= 50(k+1)^2;
// k = 1 holds for n >= 5).
FormulaValue ar_friendship(int n, int k);

// Delta-regular (even delta) or nearly delta-regular (odd delta)
// factor-critical graph of the given odd order. A deterministic circulant
// seed is tried first and verified; exhaustive search is the fallback.
// Throws infeasible_error when no such graph can exist, not_found_error
// when the search space is exhausted.
Graph build_nearly_regular_factor_critical(int delta, int order);

// All such graphs up to isomorphism (exhaustive, desk scale).
std::vector<Graph> all_nearly_regular_factor_critical(int delta, int order);

// Parameters of a member of the H family: a factor-critical regular block
// C of odd order plus a bipartite block whose left side X has x_size
// vertices, all of degree delta.
struct FamilyDescriptor {
    std::string family;        // "H" | "Gamma" | "E" | "D" | "EXF"
    int nu = 0;
    int delta = 0;
    int k = 0;                 // D family parameter
    int n = 0;                 // EXF host size
    std::optional<int> x_size; // H family: |X|; defaults to smallest feasible
};

struct HMember {
    Graph graph;
    std::vector<int> c_vertices;
    std::vector<int> x_vertices;
    std::vector<int> y_vertices;
    int nu = 0;
    int delta = 0;
};

// Deterministic H-family member: C on the lowest indices, then X, then Y
// as disjoint stars (each X vertex with delta private leaves).
HMember build_H_member(int nu, int delta, std::optional<int> x_size = std::nullopt);

// Edge swap defining the Gamma variants (odd delta): remove ux_y edge uv,
// add the edge from u to the unique degree-(delta-1) vertex of C.
Graph build_gamma_variant(const HMember& h, int u, int v);

// K_{k-1} disjoint union a nearly (k-1)-regular factor-critical graph of
// order k+1; defined for even k >= 4.
Graph build_D_k_member(int k);

// Balanced complete bipartite graph plus an extremal bounded-degree
// bounded-matching graph embedded in the first part: the extremal
// construction for fan-free graphs.
Graph build_EX_friendship(int n, int k);

// Membership predicates (all up to isolated vertices).
bool is_member_H(const Graph& g, int nu, int delta);
bool is_member_E(const Graph& g, int nu, int delta);
bool is_member_D(const Graph& g, int k);
bool is_member_F(const Graph& g, int nu, int delta);

// Every member of the H / E / D families with at most max_vertices
// non-isolated vertices, up to isomorphism.
std::vector<Graph> enumerate_H_members(int nu, int delta, int max_vertices);
std::vector<Graph> enumerate_E_members(int nu, int delta, int max_vertices);
std::vector<Graph> enumerate_D_members(int k, int max_vertices);

} // namespace arlab

#endif

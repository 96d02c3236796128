#ifndef ARLAB_ENUMERATE_HPP
#define ARLAB_ENUMERATE_HPP

#include <functional>
#include <optional>
#include <vector>

#include "arlab/graph.hpp"

namespace arlab {

// Constraints for isomorphism-free graph enumeration. Degree and matching
// caps are monotone under vertex addition and are pruned while generating.
struct EnumConstraints {
    int max_vertices = 0;                     // cap on non-isolated vertices
    std::optional<int> max_degree;
    std::optional<int> max_matching;
    std::optional<long long> exact_edges;     // visit only graphs with this count
    // Visit only graphs whose degree multiset equals this (sorted
    // descending); implies an exact vertex count of multiset.size().
    std::optional<std::vector<int>> degree_multiset;
    // Extra pruning predicate. Must be closed under induced subgraphs
    // (if it rejects G it must reject every supergraph on more vertices),
    // e.g. freedom from a fixed pattern.
    std::function<bool(const Graph&)> prune_admissible;
    // Throw capped_error after this many generated candidates (< 0: off).
    long long candidate_cap = -1;
};

struct EnumStats {
    long long candidates = 0;  // children generated before dedup
    long long classes = 0;     // isomorphism classes visited
};

// Visits exactly one representative per isomorphism class (graphs compared
// after deleting isolated vertices) satisfying the constraints, in
// deterministic order: ascending vertex count, then canonical form.
//
// Intended scale: <= ~8 vertices unconstrained; more under degree or
// matching constraints.
EnumStats enumerate_graphs(const EnumConstraints& c,
                           const std::function<void(const Graph&)>& visit);

// All isomorphism classes with the given degree multiset (sorted
// descending inside), optionally filtered by a predicate.
std::vector<Graph> graphs_with_degree_multiset(std::vector<int> multiset);

} // namespace arlab

#endif

#ifndef ARLAB_CANONICAL_HPP
#define ARLAB_CANONICAL_HPP

#include <string>

#include "arlab/graph.hpp"

namespace arlab {

// Isomorphism-invariant byte string: the graph6 encoding of a canonically
// relabeled copy after deleting isolated vertices. Two graphs receive
// equal forms iff they are isomorphic up to isolated vertices.
using CanonicalForm = std::string;

CanonicalForm canonical_form(const Graph& g);

// The relabeled representative itself (isolated vertices removed).
Graph canonical_representative(const Graph& g);

} // namespace arlab

#endif

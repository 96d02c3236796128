#ifndef ARLAB_GRAPH_IO_HPP
#define ARLAB_GRAPH_IO_HPP

#include <string>

#include <json.hpp>

#include "arlab/graph.hpp"

namespace arlab {

// Standard graph6 text encoding (bit-exact): N(n) followed by the upper
// triangle in column order x(0,1), x(0,2), x(1,2), x(0,3), ...
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& s);

// {"n": int, "edges": [[u, v], ...]} with u < v, rows sorted.
nlohmann::ordered_json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

// Accepts a graph6 line or the JSON form above (with or without wrapper
// metadata fields).
Graph parse_graph(const std::string& text);

} // namespace arlab

#endif

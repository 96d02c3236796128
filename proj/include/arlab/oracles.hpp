#ifndef ARLAB_ORACLES_HPP
#define ARLAB_ORACLES_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "arlab/graph.hpp"
#include "arlab/rainbow.hpp"

namespace arlab {

// Uncolored forbidden pattern for Turan-number oracles.
struct TuranPattern {
    bool triangle = false;
    int fan_size = 0; // used when !triangle
};
TuranPattern parse_turan_pattern(const std::string& text);
std::string turan_pattern_to_string(const TuranPattern& p);
bool pattern_free(const Graph& g, const TuranPattern& p);

struct OracleCaps {
    int vertex_cap = -1;              // -1: kind-specific default
    long long candidate_cap = -1;     // enumeration work budget (< 0: off)
    long long partition_cap = -1;     // coloring-partition budget (< 0: off)
    int workers = 1;
};

// Brute-force result with verified witnesses. Witness graphs are canonical
// graph6 forms; every report re-verifies its witnesses before returning.
struct OracleReport {
    std::string kind;
    nlohmann::ordered_json params;
    nlohmann::ordered_json caps;
    long long value = -1;
    bool exact = true;
    bool capped = false;
    std::vector<std::string> witness_graphs;
    nlohmann::ordered_json counts = nlohmann::ordered_json::object();
    nlohmann::ordered_json work = nlohmann::ordered_json::object();
    nlohmann::ordered_json extra = nlohmann::ordered_json::object();

    nlohmann::ordered_json to_json() const;
    static std::string csv_header();
    std::string to_csv_row() const;
};

// Exact Turan number on <= n vertices with all extremal classes.
OracleReport oracle_ex(int n, const TuranPattern& pattern, const OracleCaps& caps = {});

// Exact maximum edge count under matching/degree bounds within the vertex
// cap (exact for cap >= 2*nu*(delta+1): every edge meets the <= 2*nu
// vertices of a maximum matching, each of degree <= delta).
OracleReport oracle_f(int nu, int delta, const OracleCaps& caps = {});

// All classes within the cap meeting the bounds with exactly the extremal
// edge count.
std::vector<Graph> enumerate_extremal_F(int nu, int delta, int vertex_cap);
OracleReport oracle_extremal_set(int nu, int delta, const OracleCaps& caps = {});

// Smallest r in [r_lo, r_hi] such that every partition of E(K_n) into
// exactly r unlabeled classes yields a rainbow family member; value -1
// with outcome "ar>r_hi" when the range is exhausted. The witness is the
// rainbow-free partition (lexicographically least) at the last failing
// level.
OracleReport oracle_ar(int n, const std::vector<PatternSpec>& family, int r_lo, int r_hi,
                       const OracleCaps& caps = {});

// Sweep of all fan-free classes on <= n_max vertices against the edge
// bound e(G) <= floor(n^2/4) + k * max_degree(G); value = violation count.
OracleReport oracle_fan_free_edge_bound(int n_max, int k, const OracleCaps& caps = {});

} // namespace arlab

#endif

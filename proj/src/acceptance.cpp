#include "arlab/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include "arlab/canonical.hpp"
#include "arlab/coloring.hpp"
#include "arlab/enumerate.hpp"
#include "arlab/extremal.hpp"
#include "arlab/matching.hpp"
#include "arlab/oracles.hpp"
#include "arlab/rainbow.hpp"

namespace arlab {

namespace {

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (detail.tellp() > 0) detail << "; ";
            detail << what;
        }
    }
    void note(const std::string& what) {
        if (detail.tellp() > 0) detail << "; ";
        detail << what;
    }
};

void criterion_ar_small(Check& c) {
    OracleReport rep = oracle_ar(5, {{PatternKind::Friendship, 2}}, 2, 10);
    c.expect(rep.value == 8, "ar(5, F2) = " + std::to_string(rep.value) + ", expected 8");
    c.expect(!rep.capped, "ar oracle hit a cap");
    c.expect(rep.extra.contains("witness_r") && rep.extra["witness_r"] == 7,
             "missing rainbow-free witness at r = 7");
    c.note("scanned " + rep.work["partitions_scanned"].dump() + " partitions");
}

void criterion_f_oracle(Check& c) {
    const std::pair<int, int> cases[] = {{1, 1}, {1, 2}, {2, 2}, {1, 3}, {2, 3}, {3, 3}};
    for (auto [nu, delta] : cases) {
        OracleReport rep = oracle_f(nu, delta);
        long long expected = f_formula(nu, delta);
        c.expect(rep.value == expected && rep.exact && !rep.capped,
                 "f(" + std::to_string(nu) + "," + std::to_string(delta) + ") oracle " +
                     std::to_string(rep.value) + " vs formula " + std::to_string(expected));
    }
}

void criterion_unique_extremal_22(Check& c) {
    std::vector<Graph> classes = enumerate_extremal_F(2, 2, 10);
    c.expect(classes.size() == 1, "expected a single extremal class, got " +
                                      std::to_string(classes.size()));
    Graph two_triangles = disjoint_union(Graph::complete(3), Graph::complete(3));
    c.expect(!classes.empty() && canonical_form(classes.front()) == canonical_form(two_triangles),
             "extremal class is not the disjoint pair of triangles");
}

void criterion_family_33(Check& c) {
    std::vector<Graph> classes = enumerate_extremal_F(3, 3, 10);
    c.expect(!classes.empty(), "no extremal classes found");
    for (const Graph& g : classes) {
        c.expect(is_member_E(g, 3, 3) || is_member_D(g, 4),
                 "class " + canonical_form(g) + " matches neither family");
    }
    std::set<std::string> enumerated;
    for (const Graph& g : classes) enumerated.insert(canonical_form(g));
    std::vector<Graph> constructed = enumerate_E_members(3, 3, 10);
    for (const Graph& g : enumerate_D_members(4, 10)) constructed.push_back(g);
    std::set<std::string> built;
    for (const Graph& g : constructed) {
        std::string form = canonical_form(g);
        built.insert(form);
        c.expect(enumerated.count(form) > 0,
                 "constructed member " + form + " missing from the enumeration");
    }
    c.note(std::to_string(enumerated.size()) + " extremal classes, " +
           std::to_string(built.size()) + " constructed members");
}

void criterion_family_small(Check& c) {
    std::vector<Graph> tri = enumerate_extremal_F(1, 2, 6);
    c.expect(tri.size() == 1 &&
                 canonical_form(tri.front()) == canonical_form(Graph::complete(3)),
             "extremal set for nu=1, delta=2 is not exactly the triangle");
    std::vector<Graph> mid = enumerate_extremal_F(2, 3, 9);
    c.expect(!mid.empty(), "no extremal classes for nu=2, delta=3");
    for (const Graph& g : mid)
        c.expect(is_member_E(g, 2, 3), "class " + canonical_form(g) + " not an E member");
}

void criterion_star_matching_certificates(Check& c) {
    struct Row {
        EdgeColoring coloring;
        int k;
        int expected_colors;
    };
    std::vector<Row> rows;
    rows.push_back({coloring_k2_star(12), 2, 3});
    rows.push_back({coloring_two_cliques(27, 3), 3, 7});
    rows.push_back({coloring_clique_plus_C(48, 4), 4, 11});
    for (const Row& row : rows) {
        c.expect(row.coloring.colors_used() == row.expected_colors,
                 "k=" + std::to_string(row.k) + " coloring uses " +
                     std::to_string(row.coloring.colors_used()) + " colors, expected " +
                     std::to_string(row.expected_colors));
        c.expect(!find_rainbow_star(row.coloring, row.k + 1),
                 "k=" + std::to_string(row.k) + " coloring has a rainbow star");
        c.expect(!find_rainbow_matching(row.coloring, row.k + 1),
                 "k=" + std::to_string(row.k) + " coloring has a rainbow matching");
    }
}

void criterion_friendship_certificates(Check& c) {
    const std::pair<int, int> cases[] = {{10, 1}, {20, 2}, {30, 2}};
    for (auto [n, k] : cases) {
        EdgeColoring col = coloring_lower_friendship(n, k);
        c.expect(!find_rainbow_friendship(col, k + 1),
                 "n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                     " lower-bound coloring has a rainbow fan");
    }
}

void criterion_turan_oracles(Check& c) {
    for (int n = 3; n <= 7; ++n) {
        OracleReport rep = oracle_ex(n, {true, 0});
        long long expected = static_cast<long long>(n) * n / 4;
        c.expect(rep.value == expected && !rep.capped,
                 "ex(" + std::to_string(n) + ", K3) oracle " + std::to_string(rep.value) +
                     " vs " + std::to_string(expected));
    }
    for (int n = 5; n <= 7; ++n) {
        OracleReport rep = oracle_ex(n, {false, 2});
        long long expected = static_cast<long long>(n) * n / 4 + 1;
        c.expect(rep.value == expected && !rep.capped,
                 "ex(" + std::to_string(n) + ", F2) oracle " + std::to_string(rep.value) +
                     " vs " + std::to_string(expected));
    }
}

void criterion_ge_sweep(Check& c) {
    EnumConstraints ec;
    ec.max_vertices = 8;
    long long checked = 0, failed = 0;
    enumerate_graphs(ec, [&](const Graph& g) {
        ++checked;
        if (!verify_ge(g, gallai_edmonds(g))) {
            ++failed;
            if (failed <= 3) c.note("decomposition check failed on " + canonical_form(g));
        }
    });
    c.expect(failed == 0, std::to_string(failed) + " failures");
    c.note(std::to_string(checked) + " classes checked");
}

void criterion_deleted_pair_matchings(Check& c) {
    long long graphs_checked = 0, violations = 0;
    for (int order : {7, 9}) {
        std::vector<int> multiset(order, 5);
        multiset.back() = 4;
        for (const Graph& g : graphs_with_degree_multiset(multiset)) {
            if (!is_factor_critical(g)) continue;
            ++graphs_checked;
            for (int v = 0; v < g.order() && violations == 0; ++v) {
                Graph gv = g.remove_vertices({v});
                for (const Edge& e : gv.edges()) {
                    if (!has_perfect_matching(gv.remove_edges({e}))) {
                        ++violations;
                        break;
                    }
                }
            }
        }
    }
    c.expect(graphs_checked > 0, "no nearly 5-regular factor-critical graphs found");
    c.expect(violations == 0, std::to_string(violations) + " deleted-pair violations");
    c.note(std::to_string(graphs_checked) + " graphs checked");
}

void criterion_edge_bound_sweep(Check& c) {
    for (int k : {1, 2}) {
        OracleReport rep = oracle_fan_free_edge_bound(7, k);
        c.expect(rep.value == 0 && !rep.capped,
                 "k=" + std::to_string(k) + ": " + std::to_string(rep.value) + " violations");
    }
}

} // namespace

std::vector<CriterionResult> run_acceptance_suite() {
    struct Entry {
        int id;
        const char* name;
        void (*fn)(Check&);
    };
    const Entry entries[] = {
        {1, "anti-Ramsey oracle: ar(5, F2) = 8 with rainbow-free witness at 7", criterion_ar_small},
        {2, "bounded-degree matching oracle agrees with the closed form", criterion_f_oracle},
        {3, "unique extremal class for nu=2, delta=2", criterion_unique_extremal_22},
        {4, "nu=3, delta=3 extremal classes match the constructed families", criterion_family_33},
        {5, "small extremal sets: (1,2) and (2,3)", criterion_family_small},
        {6, "star/matching lower-bound colorings are rainbow-free", criterion_star_matching_certificates},
        {7, "fan lower-bound colorings are rainbow-free", criterion_friendship_certificates},
        {8, "Turan oracles for triangles and 2-fans", criterion_turan_oracles},
        {9, "canonical decomposition verifies on every class up to 8 vertices", criterion_ge_sweep},
        {10, "nearly 5-regular factor-critical graphs: deleted-pair matchings", criterion_deleted_pair_matchings},
        {11, "fan-free edge bound sweep up to 7 vertices", criterion_edge_bound_sweep},
    };
    std::vector<CriterionResult> out;
    for (const Entry& e : entries) {
        CriterionResult r;
        r.id = e.id;
        r.name = e.name;
        Check check;
        auto start = std::chrono::steady_clock::now();
        try {
            e.fn(check);
        } catch (const std::exception& ex) {
            check.ok = false;
            check.note(std::string("exception: ") + ex.what());
        }
        r.pass = check.ok;
        r.detail = check.detail.str();
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out.push_back(std::move(r));
    }
    return out;
}

} // namespace arlab

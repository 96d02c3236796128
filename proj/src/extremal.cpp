#include "arlab/extremal.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "arlab/canonical.hpp"
#include "arlab/enumerate.hpp"
#include "arlab/errors.hpp"
#include "arlab/matching.hpp"

namespace arlab {

long long f_formula(int nu, int delta) {
    if (nu < 1 || delta < 1)
        throw std::invalid_argument("f(nu, delta) needs nu >= 1 and delta >= 1");
    long long half_up = (delta + 1) / 2;
    return static_cast<long long>(nu) * delta + (delta / 2) * (nu / half_up);
}

long long ex_triangle(int n) {
    if (n < 3) throw std::invalid_argument("triangle Turan number needs n >= 3");
    return static_cast<long long>(n) * n / 4;
}

FormulaValue ex_friendship(int n, int k) {
    if (k < 2) throw std::invalid_argument("fan Turan formula needs k >= 2");
    long long quarter = static_cast<long long>(n) * n / 4;
    long long extra = k % 2 == 1 ? static_cast<long long>(k) * k - k
                                 : static_cast<long long>(k) * k - 3 * k / 2;
    bool in_range = k == 2 ? n >= 5 : n >= 50LL * k * k;
    return {quarter + extra, in_range};
}

FormulaValue ar_star_matching(int n, int k) {
    if (k < 2) throw std::invalid_argument("star/matching anti-Ramsey formula needs k >= 2");
    long long v;
    if (k == 2) v = 4;
    else if (k % 2 == 1) v = static_cast<long long>(k) * k - k + 2;
    else v = static_cast<long long>(k) * k - 3 * k / 2 + 2;
    return {v, n >= 3LL * k * k};
}

FormulaValue ar_friendship(int n, int k) {
    if (k < 1) throw std::invalid_argument("fan anti-Ramsey formula needs k >= 1");
    if (k == 1) return {static_cast<long long>(n) * n / 4 + 2, n >= 5};
    FormulaValue ex = ex_friendship(n, k);
    return {ex.value + 2, n >= 50LL * (k + 1) * (k + 1)};
}

namespace {

// even delta: all degrees delta; odd delta: one vertex of degree delta-1,
// the rest delta
bool degrees_match_nearly_regular(const Graph& g, int delta) {
    int deficient = 0;
    for (int v = 0; v < g.order(); ++v) {
        int d = g.degree(v);
        if (d == delta) continue;
        if (delta % 2 == 1 && d == delta - 1) ++deficient;
        else return false;
    }
    return delta % 2 == 0 ? true : deficient == 1;
}

Graph circulant_seed(int delta, int order) {
    Graph g(order);
    int t = delta / 2;
    for (int v = 0; v < order; ++v)
        for (int d = 1; d <= t; ++d) g.add_edge(v, (v + d) % order);
    if (delta % 2 == 1) {
        // near-perfect chord matching leaving vertex 0 deficient
        int m = (order - 1) / 2;
        for (int j = 1; j <= m; ++j) g.add_edge(j, j + m);
    }
    return g;
}

} // namespace

std::vector<Graph> all_nearly_regular_factor_critical(int delta, int order) {
    if (delta < 0) throw std::invalid_argument("delta must be non-negative");
    if (order < 1 || order % 2 == 0) return {};
    if (delta >= order) return {};
    if (delta <= 1) {
        // K_1 is the only factor-critical graph here: for order >= 3 the
        // degree pattern forces a disjoint matching plus one bare vertex,
        // which is never factor-critical
        if (order == 1) return {Graph(1)};
        return {};
    }
    std::vector<int> multiset(order, delta);
    if (delta % 2 == 1) multiset.back() = delta - 1;
    std::vector<Graph> out;
    for (const Graph& g : graphs_with_degree_multiset(multiset))
        if (is_factor_critical(g)) out.push_back(g);
    return out;
}

Graph build_nearly_regular_factor_critical(int delta, int order) {
    if (delta < 0) throw std::invalid_argument("delta must be non-negative");
    if (order < 1) throw infeasible_error("order must be positive");
    if (order % 2 == 0) throw infeasible_error("factor-critical graphs have odd order");
    if (delta == 0) {
        if (order == 1) return Graph(1);
        throw infeasible_error("0-regular graphs of order > 1 are not factor-critical");
    }
    if (delta >= order) throw infeasible_error("maximum degree needs order > delta");
    Graph seed = circulant_seed(delta, order);
    if (degrees_match_nearly_regular(seed, delta) && is_factor_critical(seed)) return seed;
    auto all = all_nearly_regular_factor_critical(delta, order);
    if (all.empty()) throw not_found_error("no nearly regular factor-critical graph found");
    return all.front();
}

namespace {

Graph with_extra_vertices(const Graph& g, int extra) {
    Graph h(g.order() + extra);
    for (const Edge& e : g.edges()) h.add_edge(e.u, e.v);
    return h;
}

struct HRoles {
    std::optional<int> x_vertex;    // must land in X
    std::optional<int> deficient_c; // must be the degree-(delta-1) vertex of C
    std::optional<int> y_vertex;    // must land in Y
};

// One full side per bipartite component, every chosen vertex of degree
// delta in g, total size s. Emits chosen X sets; stops early if first_only.
bool side_choices(const Graph& g, const std::vector<std::vector<int>>& comps, int s, int delta,
                  const HRoles& roles, bool first_only, std::vector<std::vector<int>>* out) {
    std::vector<std::vector<std::vector<int>>> options(comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i) {
        Graph h = g.induced(comps[i]);
        std::vector<int> side;
        if (!h.is_bipartite(&side)) return false;
        for (int tag = 0; tag <= 1; ++tag) {
            std::vector<int> chosen;
            bool ok = true;
            for (std::size_t j = 0; j < comps[i].size(); ++j) {
                if (side[j] != tag) continue;
                if (g.degree(comps[i][j]) != delta) { ok = false; break; }
                chosen.push_back(comps[i][j]);
            }
            if (!ok || chosen.empty()) continue;
            if (roles.x_vertex &&
                std::binary_search(comps[i].begin(), comps[i].end(), *roles.x_vertex) &&
                std::find(chosen.begin(), chosen.end(), *roles.x_vertex) == chosen.end())
                continue;
            if (roles.y_vertex &&
                std::find(chosen.begin(), chosen.end(), *roles.y_vertex) != chosen.end())
                continue;
            options[i].push_back(std::move(chosen));
        }
        if (options[i].empty()) return false;
    }
    // product over components, pruned by the remaining size budget
    bool found = false;
    std::vector<int> current;
    std::function<bool(std::size_t, int)> rec = [&](std::size_t i, int used) {
        if (used > s) return false;
        if (i == comps.size()) {
            if (used != s) return false;
            if (out) out->push_back(current);
            found = true;
            return first_only;
        }
        for (const auto& opt : options[i]) {
            current.insert(current.end(), opt.begin(), opt.end());
            bool stop = rec(i + 1, used + static_cast<int>(opt.size()));
            current.resize(current.size() - opt.size());
            if (stop) return true;
        }
        return false;
    };
    rec(0, 0);
    return found;
}

// Does g (isolated vertices ignored) decompose as C u G(X,Y) with the three
// defining conditions, under the optional role constraints?
bool find_h_decomposition(const Graph& g, int nu, int delta, const HRoles& roles) {
    if (nu < 0 || delta < 1) return false;
    std::vector<std::vector<int>> comps;
    for (auto& comp : g.components())
        if (comp.size() > 1 || g.degree(comp[0]) > 0) comps.push_back(std::move(comp));
    for (std::size_t ci = 0; ci < comps.size(); ++ci) {
        const auto& comp = comps[ci];
        int corder = static_cast<int>(comp.size());
        // a one-vertex C cannot satisfy the regularity condition for delta >= 1
        if (corder % 2 == 0 || corder == 1) continue;
        Graph c = g.induced(comp);
        if (!degrees_match_nearly_regular(c, delta)) continue;
        if (roles.deficient_c) {
            if (!std::binary_search(comp.begin(), comp.end(), *roles.deficient_c)) continue;
            if (g.degree(*roles.deficient_c) != delta - 1) continue;
        }
        if (roles.x_vertex && std::binary_search(comp.begin(), comp.end(), *roles.x_vertex))
            continue;
        if (roles.y_vertex && std::binary_search(comp.begin(), comp.end(), *roles.y_vertex))
            continue;
        if (!is_factor_critical(c)) continue;
        int s = nu - (corder - 1) / 2;
        if (s < 0) continue;
        std::vector<std::vector<int>> rest;
        for (std::size_t j = 0; j < comps.size(); ++j)
            if (j != ci) rest.push_back(comps[j]);
        if (rest.empty()) {
            if (s != 0) continue;
            if (roles.x_vertex || roles.y_vertex) continue;
            return true;
        }
        if (s == 0) continue; // a bipartite block with edges needs X vertices
        bool degrees_ok = true;
        int b_nu = 0;
        for (const auto& bc : rest) {
            for (int v : bc)
                if (g.degree(v) > delta) { degrees_ok = false; break; }
            if (!degrees_ok) break;
            b_nu += matching_number(g.induced(bc));
        }
        if (!degrees_ok || b_nu != s) continue;
        if (side_choices(g, rest, s, delta, roles, true, nullptr)) return true;
    }
    return false;
}

} // namespace

bool is_member_H(const Graph& g, int nu, int delta) {
    return find_h_decomposition(g, nu, delta, {});
}

bool is_member_E(const Graph& g, int nu, int delta) {
    if (find_h_decomposition(g, nu, delta, {})) return true;
    if (delta % 2 == 0 || delta < 1) return false;
    // reverse the defining edge swap: some edge u-v' goes back to an X-Y
    // edge u-v, where v may have been stripped with the swap
    for (const Edge& e : g.edges()) {
        const std::pair<int, int> dirs[2] = {{e.u, e.v}, {e.v, e.u}};
        for (auto [u, vp] : dirs) {
            if (g.degree(u) != delta || g.degree(vp) != delta) continue;
            Graph h0 = g.remove_edges({Edge(u, vp)});
            for (int v = 0; v <= g.order(); ++v) {
                Graph h1;
                int target = v;
                if (v == g.order()) {
                    h1 = with_extra_vertices(h0, 1);
                } else {
                    if (v == u || v == vp || h0.has_edge(u, v)) continue;
                    h1 = h0;
                }
                h1.add_edge(u, target);
                HRoles roles;
                roles.x_vertex = u;
                roles.deficient_c = vp;
                roles.y_vertex = target;
                if (find_h_decomposition(h1, nu, delta, roles)) return true;
            }
        }
    }
    return false;
}

bool is_member_D(const Graph& g, int k) {
    if (k < 4 || k % 2 != 0) return false;
    std::vector<std::vector<int>> comps;
    for (auto& comp : g.components())
        if (comp.size() > 1) comps.push_back(std::move(comp));
    if (comps.size() != 2) return false;
    if (static_cast<int>(comps[0].size()) > static_cast<int>(comps[1].size()))
        std::swap(comps[0], comps[1]);
    if (static_cast<int>(comps[0].size()) != k - 1 ||
        static_cast<int>(comps[1].size()) != k + 1)
        return false;
    Graph clique = g.induced(comps[0]);
    if (clique.edge_count() != static_cast<long long>(k - 1) * (k - 2) / 2) return false;
    Graph c = g.induced(comps[1]);
    return degrees_match_nearly_regular(c, k - 1) && is_factor_critical(c);
}

bool is_member_F(const Graph& g, int nu, int delta) {
    if (nu < 1 || delta < 1) return g.edge_count() == 0;
    return matching_number(g) <= nu && g.max_degree() <= delta &&
           g.edge_count() == f_formula(nu, delta);
}

HMember build_H_member(int nu, int delta, std::optional<int> x_size) {
    if (nu < 0 || delta < 0) throw std::invalid_argument("H member needs nu, delta >= 0");
    if (delta < 1) throw infeasible_error("H members need delta >= 1");
    std::vector<int> sizes;
    if (x_size) {
        if (*x_size < 0 || *x_size > nu) throw infeasible_error("|X| must lie in 0..nu");
        sizes.push_back(*x_size);
    } else {
        for (int s = 0; s <= nu; ++s) sizes.push_back(s);
    }
    for (int s : sizes) {
        int corder = 2 * (nu - s) + 1;
        if (corder == 1) continue; // regularity on one vertex is unsatisfiable
        Graph c;
        try {
            c = build_nearly_regular_factor_critical(delta, corder);
        } catch (const infeasible_error&) {
            continue;
        } catch (const not_found_error&) {
            continue;
        }
        HMember m;
        m.nu = nu;
        m.delta = delta;
        int total = corder + s * (1 + delta);
        m.graph = with_extra_vertices(c, total - corder);
        for (int v = 0; v < corder; ++v) m.c_vertices.push_back(v);
        int next = corder;
        for (int i = 0; i < s; ++i) {
            int center = next++;
            m.x_vertices.push_back(center);
            for (int l = 0; l < delta; ++l) {
                int leaf = next++;
                m.y_vertices.push_back(leaf);
                m.graph.add_edge(center, leaf);
            }
        }
        return m;
    }
    throw infeasible_error("no feasible H member for these parameters");
}

Graph build_gamma_variant(const HMember& h, int u, int v) {
    if (h.delta % 2 == 0)
        throw std::invalid_argument("gamma variants exist only for odd delta");
    if (std::find(h.x_vertices.begin(), h.x_vertices.end(), u) == h.x_vertices.end())
        throw std::invalid_argument("u must be an X vertex");
    if (std::find(h.y_vertices.begin(), h.y_vertices.end(), v) == h.y_vertices.end() ||
        !h.graph.has_edge(u, v))
        throw std::invalid_argument("v must be a Y neighbor of u");
    int deficient = -1;
    for (int w : h.c_vertices)
        if (h.graph.degree(w) == h.delta - 1) deficient = w;
    if (deficient < 0) throw std::logic_error("H member lacks a deficient C vertex");
    Graph g = h.graph;
    g.remove_edge(u, v);
    g.add_edge(u, deficient);
    return g;
}

Graph build_D_k_member(int k) {
    if (k < 4 || k % 2 != 0) throw std::invalid_argument("D_k members need even k >= 4");
    return disjoint_union(Graph::complete(k - 1),
                          build_nearly_regular_factor_critical(k - 1, k + 1));
}

Graph build_EX_friendship(int n, int k) {
    if (k < 1) throw std::invalid_argument("fan extremal construction needs k >= 1");
    if (n < 2) throw std::invalid_argument("host too small");
    int a = (n + 1) / 2; // embedded block lives in the first (larger) part
    Graph embedded;
    if (k == 1) embedded = Graph(0);
    else if (k == 2) embedded = Graph::path(2);
    else if (k % 2 == 1) embedded = disjoint_union(Graph::complete(k), Graph::complete(k));
    else embedded = build_D_k_member(k);
    if (embedded.order() > a)
        throw infeasible_error("partite set too small for the embedded extremal graph");
    Graph g = Graph::turan(n, 2);
    for (const Edge& e : embedded.edges()) g.add_edge(e.u, e.v);
    return g;
}

namespace {

struct MemberAccumulator {
    std::map<CanonicalForm, Graph> classes;
    void add(const Graph& g, int max_vertices) {
        Graph s = g.strip_isolated();
        if (s.order() > max_vertices) return;
        classes.emplace(canonical_form(s), s);
    }
    std::vector<Graph> take() {
        std::vector<Graph> out;
        for (auto& [form, g] : classes) out.push_back(std::move(g));
        return out;
    }
};

std::vector<Graph> enumerate_h_like(int nu, int delta, int max_vertices, bool with_gamma) {
    MemberAccumulator acc;
    if (delta < 1) return {};
    // gamma variants can strip one vertex, so their H sources may be one
    // vertex larger than the requested cap
    int source_cap = with_gamma ? max_vertices + 1 : max_vertices;
    for (int s = 0; s <= nu; ++s) {
        int corder = 2 * (nu - s) + 1;
        if (corder == 1 || corder > source_cap) continue;
        std::vector<Graph> cs = all_nearly_regular_factor_critical(delta, corder);
        if (cs.empty()) continue;
        if (s == 0) {
            for (const Graph& c : cs) acc.add(c, max_vertices);
            continue;
        }
        int maxb = source_cap - corder;
        if (maxb < s + 1) continue;
        EnumConstraints ec;
        ec.max_vertices = maxb;
        ec.max_degree = delta;
        ec.max_matching = s;
        std::vector<Graph> bs;
        enumerate_graphs(ec, [&](const Graph& b) {
            if (b.order() > 0 && matching_number(b) == s) bs.push_back(b);
        });
        for (const Graph& b : bs) {
            std::vector<std::vector<int>> choices;
            if (!side_choices(b, b.components(), s, delta, {}, false, &choices)) continue;
            for (const Graph& c : cs) {
                Graph member = disjoint_union(c, b);
                acc.add(member, max_vertices);
                if (!with_gamma || delta % 2 == 0) continue;
                int deficient = -1;
                for (int w = 0; w < c.order(); ++w)
                    if (c.degree(w) == delta - 1) deficient = w;
                for (const auto& xs : choices) {
                    for (int xb : xs) {
                        int u = c.order() + xb;
                        b.neighbors(xb).for_each([&](int yb) {
                            int v = c.order() + yb;
                            Graph gamma = member;
                            gamma.remove_edge(u, v);
                            gamma.add_edge(u, deficient);
                            acc.add(gamma, max_vertices);
                        });
                    }
                }
            }
        }
    }
    return acc.take();
}

} // namespace

std::vector<Graph> enumerate_H_members(int nu, int delta, int max_vertices) {
    return enumerate_h_like(nu, delta, max_vertices, false);
}

std::vector<Graph> enumerate_E_members(int nu, int delta, int max_vertices) {
    return enumerate_h_like(nu, delta, max_vertices, true);
}

std::vector<Graph> enumerate_D_members(int k, int max_vertices) {
    if (k < 4 || k % 2 != 0) return {};
    MemberAccumulator acc;
    for (const Graph& c : all_nearly_regular_factor_critical(k - 1, k + 1))
        acc.add(disjoint_union(Graph::complete(k - 1), c), max_vertices);
    return acc.take();
}

} // namespace arlab

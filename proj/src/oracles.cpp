#include "arlab/oracles.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <stdexcept>

#include "arlab/canonical.hpp"
#include "arlab/enumerate.hpp"
#include "arlab/errors.hpp"
#include "arlab/extremal.hpp"
#include "arlab/graph_io.hpp"
#include "arlab/matching.hpp"
#include "arlab/partitions.hpp"

namespace arlab {

TuranPattern parse_turan_pattern(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (ch != ' ' && ch != '\t') s.push_back(ch);
    if (s == "K3" || s == "k3" || s == "triangle") return {true, 0};
    if (!s.empty() && (s[0] == 'F' || s[0] == 'f')) {
        std::string num = s.substr(1);
        if (!num.empty() && num.find_first_not_of("0123456789") == std::string::npos) {
            int k = std::stoi(num);
            if (k >= 1) return {false, k};
        }
    }
    throw std::invalid_argument("unrecognized forbidden pattern: " + text);
}

std::string turan_pattern_to_string(const TuranPattern& p) {
    return p.triangle ? "K3" : "F" + std::to_string(p.fan_size);
}

bool pattern_free(const Graph& g, const TuranPattern& p) {
    if (p.triangle) return !g.contains_triangle();
    return !contains_friendship(g, p.fan_size).has_value();
}

nlohmann::ordered_json OracleReport::to_json() const {
    nlohmann::ordered_json j;
    j["schema"] = "v1";
    j["kind"] = kind;
    j["params"] = params;
    j["caps"] = caps;
    j["value"] = value;
    j["exact"] = exact;
    j["capped"] = capped;
    j["counts"] = counts;
    j["witnesses"] = witness_graphs;
    if (!extra.empty()) j["detail"] = extra;
    j["work"] = work;
    return j;
}

std::string OracleReport::csv_header() { return "kind,params,value,exact,capped,witnesses"; }

std::string OracleReport::to_csv_row() const {
    std::string w;
    for (const auto& g : witness_graphs) {
        if (!w.empty()) w.push_back(' ');
        w += g;
    }
    return kind + ",\"" + params.dump() + "\"," + std::to_string(value) + "," +
           (exact ? "true" : "false") + "," + (capped ? "true" : "false") + ",\"" + w + "\"";
}

namespace {

struct ExtremalScan {
    long long best = -1;
    std::vector<std::pair<std::string, Graph>> argmax;
    long long classes = 0;

    void offer(const Graph& g) {
        ++classes;
        long long e = g.edge_count();
        if (e > best) {
            best = e;
            argmax.clear();
        }
        if (e == best) argmax.emplace_back(canonical_form(g), g);
    }

    std::vector<std::string> forms() const {
        std::vector<std::string> out;
        for (const auto& [f, g] : argmax) out.push_back(f);
        std::sort(out.begin(), out.end());
        return out;
    }
};

} // namespace

OracleReport oracle_ex(int n, const TuranPattern& pattern, const OracleCaps& caps) {
    if (n < 1) throw std::invalid_argument("oracle_ex needs n >= 1");
    if (pattern.triangle && n < 3) throw std::invalid_argument("triangle oracle needs n >= 3");
    OracleReport rep;
    rep.kind = "ex";
    rep.params = {{"n", n}, {"pattern", turan_pattern_to_string(pattern)}};
    rep.caps = {{"vertex_cap", n}, {"candidate_cap", caps.candidate_cap}};

    EnumConstraints ec;
    ec.max_vertices = n;
    ec.candidate_cap = caps.candidate_cap;
    ec.prune_admissible = [&](const Graph& g) { return pattern_free(g, pattern); };
    ExtremalScan scan;
    EnumStats stats;
    try {
        stats = enumerate_graphs(ec, [&](const Graph& g) { scan.offer(g); });
    } catch (const capped_error&) {
        rep.capped = true;
        rep.exact = false;
    }
    rep.value = scan.best;
    rep.witness_graphs = scan.forms();
    rep.counts["pattern_free_classes"] = scan.classes;
    rep.counts["extremal_classes"] = rep.witness_graphs.size();
    rep.work["enumeration_candidates"] = stats.candidates;
    // witnesses re-verify: stated edge count and pattern-freeness
    for (const auto& [form, g] : scan.argmax) {
        if (g.edge_count() != rep.value || !pattern_free(g, pattern))
            throw std::logic_error("extremal witness failed re-verification");
    }
    return rep;
}

OracleReport oracle_f(int nu, int delta, const OracleCaps& caps) {
    if (nu < 1 || delta < 1) throw std::invalid_argument("oracle_f needs nu, delta >= 1");
    int full_cap = 2 * nu * (delta + 1);
    int cap = caps.vertex_cap >= 0 ? caps.vertex_cap : full_cap;
    OracleReport rep;
    rep.kind = "f";
    rep.params = {{"nu", nu}, {"delta", delta}};
    rep.caps = {{"vertex_cap", cap}, {"candidate_cap", caps.candidate_cap}};

    EnumConstraints ec;
    ec.max_vertices = cap;
    ec.max_degree = delta;
    ec.max_matching = nu;
    ec.candidate_cap = caps.candidate_cap;
    ExtremalScan scan;
    EnumStats stats;
    try {
        stats = enumerate_graphs(ec, [&](const Graph& g) { scan.offer(g); });
    } catch (const capped_error&) {
        rep.capped = true;
    }
    rep.exact = !rep.capped && cap >= full_cap;
    rep.value = scan.best;
    rep.witness_graphs = scan.forms();
    rep.counts["admissible_classes"] = scan.classes;
    rep.counts["extremal_classes"] = rep.witness_graphs.size();
    if (cap < full_cap) rep.counts["cap_below_guarantee"] = true;
    rep.work["enumeration_candidates"] = stats.candidates;
    for (const auto& [form, g] : scan.argmax) {
        if (g.edge_count() != rep.value || matching_number(g) > nu || g.max_degree() > delta)
            throw std::logic_error("bounded-degree extremal witness failed re-verification");
    }
    return rep;
}

std::vector<Graph> enumerate_extremal_F(int nu, int delta, int vertex_cap) {
    EnumConstraints ec;
    ec.max_vertices = vertex_cap;
    ec.max_degree = delta;
    ec.max_matching = nu;
    ec.exact_edges = f_formula(nu, delta);
    std::vector<Graph> out;
    enumerate_graphs(ec, [&](const Graph& g) { out.push_back(g); });
    return out;
}

OracleReport oracle_extremal_set(int nu, int delta, const OracleCaps& caps) {
    if (nu < 1 || delta < 1) throw std::invalid_argument("extremal set needs nu, delta >= 1");
    int full_cap = 2 * nu * (delta + 1);
    int cap = caps.vertex_cap >= 0 ? caps.vertex_cap : full_cap;
    OracleReport rep;
    rep.kind = "extremal-set";
    rep.params = {{"nu", nu}, {"delta", delta}};
    rep.caps = {{"vertex_cap", cap}};
    std::vector<Graph> classes = enumerate_extremal_F(nu, delta, cap);
    rep.value = static_cast<long long>(classes.size());
    rep.exact = cap >= full_cap;
    if (!rep.exact) rep.counts["cap_below_guarantee"] = true;
    long long target = f_formula(nu, delta);
    rep.counts["edge_count"] = target;
    for (const Graph& g : classes) {
        if (g.edge_count() != target || matching_number(g) > nu || g.max_degree() > delta)
            throw std::logic_error("extremal family witness failed re-verification");
        rep.witness_graphs.push_back(canonical_form(g));
    }
    std::sort(rep.witness_graphs.begin(), rep.witness_graphs.end());
    return rep;
}

namespace {

// One forcing level of the anti-Ramsey oracle: scan all partitions of the
// edge list of K_n into exactly r unlabeled classes, looking for one whose
// coloring has no rainbow family member.
struct LevelResult {
    bool forced = true;
    std::vector<int> witness_rgs;
    long long scanned = 0; // partitions up to and including the witness
    bool capped = false;
};

EdgeColoring coloring_from_rgs(int n, const std::vector<Edge>& edges, const std::vector<int>& rgs) {
    EdgeColoring c(n);
    for (std::size_t i = 0; i < edges.size(); ++i) c.set_color(edges[i].u, edges[i].v, rgs[i] + 1);
    return c;
}

bool rgs_suffix_scan(std::vector<int>& a, int i, int curmax, int m, int r,
                     const std::function<bool(const std::vector<int>&)>& visit) {
    if (i == m) return curmax == r - 1 ? visit(a) : true;
    int hi = std::min(curmax + 1, r - 1);
    for (int val = 0; val <= hi; ++val) {
        int newmax = std::max(val, curmax);
        if (r - 1 - newmax > m - 1 - i) continue;
        a[i] = val;
        if (!rgs_suffix_scan(a, i + 1, newmax, m, r, visit)) return false;
    }
    return true;
}

LevelResult scan_level(int n, const std::vector<Edge>& edges, const std::vector<PatternSpec>& family,
                       int r, long long partition_cap, int workers) {
    int m = static_cast<int>(edges.size());
    auto rainbow_free = [&](const std::vector<int>& rgs) {
        EdgeColoring c = coloring_from_rgs(n, edges, rgs);
        return !find_rainbow_in_family(c, family).has_value();
    };

    if (workers <= 1 || m <= 6) {
        LevelResult res;
        std::vector<int> a(m, 0);
        bool completed = rgs_suffix_scan(a, m == 0 ? 0 : 1, 0, m, r, [&](const std::vector<int>& rgs) {
            ++res.scanned;
            if (partition_cap >= 0 && res.scanned > partition_cap) {
                res.capped = true;
                return false;
            }
            if (rainbow_free(rgs)) {
                res.forced = false;
                res.witness_rgs = rgs;
                return false;
            }
            return true;
        });
        (void)completed;
        return res;
    }

    // deterministic parallel scan: split at a fixed prefix depth; tasks with
    // an index above the first witness may stop early, earlier tasks always
    // run to completion, so the merged result and counters are exactly the
    // sequential ones
    const int depth = std::min(m, 5);
    struct Prefix {
        std::vector<int> a;
        int curmax;
    };
    std::vector<Prefix> prefixes;
    {
        std::vector<int> a(m, 0);
        std::function<void(int, int)> gen = [&](int i, int curmax) {
            if (i == depth) {
                if (r - 1 - curmax <= m - depth) prefixes.push_back({a, curmax});
                return;
            }
            int hi = std::min(curmax + 1, r - 1);
            for (int val = 0; val <= hi; ++val) {
                a[i] = val;
                gen(i + 1, std::max(val, curmax));
            }
        };
        gen(m == 0 ? 0 : 1, 0);
    }

    struct TaskOut {
        bool found = false;
        std::vector<int> witness;
        long long scanned = 0;
        bool capped = false;
    };
    std::atomic<int> first_hit{static_cast<int>(prefixes.size())};
    std::vector<TaskOut> outs(prefixes.size());

    auto run_task = [&](int ti) {
        TaskOut& out = outs[ti];
        std::vector<int> a = prefixes[ti].a;
        rgs_suffix_scan(a, depth, prefixes[ti].curmax, m, r, [&](const std::vector<int>& rgs) {
            ++out.scanned;
            if (partition_cap >= 0 && out.scanned > partition_cap) {
                out.capped = true;
                return false;
            }
            if (ti > first_hit.load(std::memory_order_relaxed)) return false;
            if (rainbow_free(rgs)) {
                out.found = true;
                out.witness = rgs;
                int expect = first_hit.load();
                while (ti < expect && !first_hit.compare_exchange_weak(expect, ti)) {}
                return false;
            }
            return true;
        });
    };

    std::vector<std::future<void>> running;
    std::atomic<int> next{0};
    int pool = std::min<int>(workers, static_cast<int>(prefixes.size()));
    for (int w = 0; w < pool; ++w) {
        running.push_back(std::async(std::launch::async, [&]() {
            while (true) {
                int ti = next.fetch_add(1);
                if (ti >= static_cast<int>(prefixes.size())) return;
                run_task(ti);
            }
        }));
    }
    for (auto& f : running) f.get();

    LevelResult res;
    for (std::size_t ti = 0; ti < prefixes.size(); ++ti) {
        if (outs[ti].capped) {
            res.capped = true;
            res.scanned += outs[ti].scanned;
            break;
        }
        res.scanned += outs[ti].scanned;
        if (outs[ti].found) {
            res.forced = false;
            res.witness_rgs = outs[ti].witness;
            break;
        }
    }
    return res;
}

} // namespace

OracleReport oracle_ar(int n, const std::vector<PatternSpec>& family, int r_lo, int r_hi,
                       const OracleCaps& caps) {
    if (n < 2) throw std::invalid_argument("anti-Ramsey oracle needs n >= 2");
    if (family.empty()) throw std::invalid_argument("family must not be empty");
    long long m = static_cast<long long>(n) * (n - 1) / 2;
    if (r_lo < 1) r_lo = 1;
    if (r_hi > m) r_hi = static_cast<int>(m);
    if (r_lo > r_hi) throw std::invalid_argument("empty color range");

    std::vector<Edge> edges = Graph::complete(n).edges();
    OracleReport rep;
    rep.kind = "ar";
    std::string fam;
    for (const auto& p : family) {
        if (!fam.empty()) fam.push_back(';');
        fam += pattern_to_string(p);
    }
    rep.params = {{"n", n}, {"family", fam}, {"r_lo", r_lo}, {"r_hi", r_hi}};
    rep.caps = {{"partition_cap", caps.partition_cap}, {"workers", caps.workers}};

    auto levels = nlohmann::ordered_json::array();
    long long total_scanned = 0;
    rep.value = -1;
    std::vector<int> last_witness;
    int last_witness_r = -1;
    for (int r = r_lo; r <= r_hi; ++r) {
        LevelResult lr = scan_level(n, edges, family, r, caps.partition_cap, caps.workers);
        total_scanned += lr.scanned;
        nlohmann::ordered_json lv;
        lv["r"] = r;
        lv["partitions_scanned"] = lr.scanned;
        lv["stirling_count"] = stirling2(static_cast<int>(m), r);
        if (lr.capped) {
            lv["outcome"] = "capped";
            levels.push_back(lv);
            rep.capped = true;
            rep.exact = false;
            break;
        }
        lv["outcome"] = lr.forced ? "forces-rainbow" : "rainbow-free-partition";
        levels.push_back(lv);
        if (lr.forced) {
            rep.value = r;
            break;
        }
        last_witness = lr.witness_rgs;
        last_witness_r = r;
    }
    rep.extra["levels"] = levels;
    if (rep.value < 0 && !rep.capped) rep.extra["outcome"] = "ar>" + std::to_string(r_hi);
    else if (rep.value >= 0) rep.extra["outcome"] = "ar=" + std::to_string(rep.value);
    if (!last_witness.empty()) {
        EdgeColoring w = coloring_from_rgs(n, edges, last_witness);
        if (find_rainbow_in_family(w, family))
            throw std::logic_error("rainbow-free witness failed re-verification");
        rep.extra["witness_r"] = last_witness_r;
        rep.extra["witness_coloring"] = w.to_json();
    }
    rep.work["partitions_scanned"] = total_scanned;
    return rep;
}

OracleReport oracle_fan_free_edge_bound(int n_max, int k, const OracleCaps& caps) {
    if (n_max < 1 || k < 1) throw std::invalid_argument("edge-bound sweep needs n_max, k >= 1");
    OracleReport rep;
    rep.kind = "lemma-aa";
    rep.params = {{"n_max", n_max}, {"k", k}};
    rep.caps = {{"vertex_cap", n_max}, {"candidate_cap", caps.candidate_cap}};
    TuranPattern forbidden{false, k + 1};
    EnumConstraints ec;
    ec.max_vertices = n_max;
    ec.candidate_cap = caps.candidate_cap;
    ec.prune_admissible = [&](const Graph& g) { return pattern_free(g, forbidden); };
    long long checked = 0, violations = 0;
    EnumStats stats;
    try {
        stats = enumerate_graphs(ec, [&](const Graph& g) {
            ++checked;
            long long n = g.order();
            long long bound = n * n / 4 + static_cast<long long>(k) * g.max_degree();
            if (g.edge_count() > bound) {
                ++violations;
                rep.witness_graphs.push_back(canonical_form(g));
            }
        });
    } catch (const capped_error&) {
        rep.capped = true;
        rep.exact = false;
    }
    rep.value = violations;
    rep.counts["classes_checked"] = checked;
    rep.work["enumeration_candidates"] = stats.candidates;
    return rep;
}

} // namespace arlab

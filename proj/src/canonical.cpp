#include "arlab/canonical.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>

#include "arlab/graph_io.hpp"

namespace arlab {

namespace {

// Iterated degree refinement. Returns a color per vertex; colors are ranks
// of structure-derived signatures, so they are isomorphism-invariant.
std::vector<int> refinement_colors(const Graph& g) {
    int n = g.order();
    std::vector<int> color(n, 0);
    int classes = 1;
    for (int round = 0; round < n; ++round) {
        std::vector<std::pair<std::vector<int>, int>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> s;
            s.push_back(color[v]);
            std::vector<int> nb;
            g.neighbors(v).for_each([&](int w) { nb.push_back(color[w]); });
            std::sort(nb.begin(), nb.end());
            s.insert(s.end(), nb.begin(), nb.end());
            sig[v] = {std::move(s), v};
        }
        std::map<std::vector<int>, int> rank;
        for (const auto& [s, v] : sig) rank.emplace(s, 0);
        int next = 0;
        for (auto& [s, r] : rank) r = next++;
        for (const auto& [s, v] : sig) color[v] = rank[s];
        if (next == classes) break;
        classes = next;
    }
    return color;
}

// Minimal graph6 bit sequence over all vertex orderings that respect the
// refinement classes (class colors in ascending order). Branch and bound:
// best[] holds the incumbent chunk per position, candidates are expanded
// in ascending chunk order and pruned against the incumbent.
class MinFormSearch {
public:
    explicit MinFormSearch(const Graph& g) : g_(g), n_(g.order()) {}

    std::vector<int> run() {
        if (n_ == 0) return {};
        if (n_ > 64)
            throw std::invalid_argument("canonical form supports components up to 64 vertices");
        if (g_.edge_count() == static_cast<long long>(n_) * (n_ - 1) / 2) {
            std::vector<int> identity(n_);
            for (int i = 0; i < n_; ++i) identity[i] = i;
            return identity; // complete graph: every ordering is minimal
        }
        colors_ = refinement_colors(g_);
        schedule_.resize(n_);
        {
            std::vector<int> order(n_);
            for (int i = 0; i < n_; ++i) order[i] = i;
            std::stable_sort(order.begin(), order.end(),
                             [&](int a, int b) { return colors_[a] < colors_[b]; });
            for (int pos = 0; pos < n_; ++pos) schedule_[pos] = colors_[order[pos]];
        }
        best_.assign(n_, UINT64_MAX);
        best_perm_.assign(n_, -1);
        placed_.assign(n_, -1);
        placed_mask_ = Bitset(n_);
        dfs(0);
        return best_perm_;
    }

private:
    const Graph& g_;
    int n_;
    std::vector<int> colors_, schedule_;
    std::vector<std::uint64_t> best_;
    std::vector<int> best_perm_, placed_;
    Bitset placed_mask_;
    long long nodes_ = 0;

    std::uint64_t chunk_of(int v, int pos) const {
        // bits x(0,pos)..x(pos-1,pos) with x(0,pos) most significant
        std::uint64_t c = 0;
        for (int i = 0; i < pos; ++i)
            c = (c << 1) | (g_.neighbors(v).test(placed_[i]) ? 1u : 0u);
        return c;
    }

    void dfs(int pos) {
        if (++nodes_ > 200'000'000)
            throw std::runtime_error("canonical form search exceeded its node budget");
        if (pos == n_) {
            for (int i = 0; i < n_; ++i) best_perm_[i] = placed_[i];
            return;
        }
        std::vector<std::pair<std::uint64_t, int>> cands;
        for (int v = 0; v < n_; ++v) {
            if (placed_mask_.test(v) || colors_[v] != schedule_[pos]) continue;
            std::uint64_t c = chunk_of(v, pos);
            if (c <= best_[pos]) cands.emplace_back(c, v);
        }
        std::sort(cands.begin(), cands.end());
        for (const auto& [c, v] : cands) {
            if (c > best_[pos]) break;
            if (c < best_[pos]) {
                best_[pos] = c;
                for (int j = pos + 1; j < n_; ++j) best_[j] = UINT64_MAX;
            }
            placed_[pos] = v;
            placed_mask_.set(v);
            dfs(pos + 1);
            placed_mask_.reset(v);
        }
    }
};

Graph canonical_component(const Graph& comp) {
    std::vector<int> perm = MinFormSearch(comp).run();
    return comp.relabeled(perm);
}

} // namespace

Graph canonical_representative(const Graph& g) {
    Graph s = g.strip_isolated();
    // canonicalize per component, then order components by (size, form)
    std::vector<std::pair<std::string, Graph>> parts;
    for (const auto& comp : s.components()) {
        Graph c = canonical_component(s.induced(comp));
        parts.emplace_back(to_graph6(c), std::move(c));
    }
    std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
        if (a.second.order() != b.second.order()) return a.second.order() < b.second.order();
        return a.first < b.first;
    });
    Graph out(s.order());
    int off = 0;
    for (const auto& [form, c] : parts) {
        for (const Edge& e : c.edges()) out.add_edge(off + e.u, off + e.v);
        off += c.order();
    }
    return out;
}

CanonicalForm canonical_form(const Graph& g) { return to_graph6(canonical_representative(g)); }

} // namespace arlab

#include "arlab/rainbow.hpp"

#include <algorithm>
#include <stdexcept>

namespace arlab {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

int parse_count(const std::string& s, const char* what) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument(std::string("bad ") + what + " in pattern spec");
    long v = std::stol(s);
    if (v < 1 || v > 1'000'000) throw std::invalid_argument("pattern size out of range");
    return static_cast<int>(v);
}

} // namespace

PatternSpec parse_pattern(const std::string& raw) {
    std::string s = trim(raw);
    if (s.rfind("K1,", 0) == 0) return {PatternKind::Star, parse_count(s.substr(3), "star size")};
    if (s.size() > 2 && s.compare(s.size() - 2, 2, "K2") == 0)
        return {PatternKind::Matching, parse_count(s.substr(0, s.size() - 2), "matching size")};
    if (!s.empty() && (s[0] == 'F' || s[0] == 'f'))
        return {PatternKind::Friendship, parse_count(s.substr(1), "fan size")};
    throw std::invalid_argument("unrecognized pattern spec: " + raw);
}

std::vector<PatternSpec> parse_pattern_family(const std::string& text) {
    std::vector<PatternSpec> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(';', pos);
        std::string part = text.substr(pos, next == std::string::npos ? next : next - pos);
        if (!trim(part).empty()) out.push_back(parse_pattern(part));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    if (out.empty()) throw std::invalid_argument("empty pattern family");
    return out;
}

std::string pattern_to_string(const PatternSpec& p) {
    switch (p.kind) {
        case PatternKind::Star: return "K1," + std::to_string(p.size);
        case PatternKind::Matching: return std::to_string(p.size) + "K2";
        case PatternKind::Friendship: return "F" + std::to_string(p.size);
    }
    return "?";
}

nlohmann::ordered_json RainbowEmbedding::to_json() const {
    nlohmann::ordered_json j;
    j["pattern"] = pattern_to_string(pattern);
    if (center) j["center"] = *center;
    auto es = nlohmann::ordered_json::array();
    for (const Edge& e : edges) es.push_back({e.u, e.v});
    j["edges"] = std::move(es);
    j["colors"] = colors;
    return j;
}

bool verify_embedding(const EdgeColoring& c, const RainbowEmbedding& emb) {
    int n = c.host_order();
    if (emb.edges.size() != emb.colors.size()) return false;
    std::vector<int> seen;
    for (std::size_t i = 0; i < emb.edges.size(); ++i) {
        const Edge& e = emb.edges[i];
        if (e.u < 0 || e.v >= n || e.u == e.v) return false;
        if (c.color(e.u, e.v) != emb.colors[i]) return false;
        seen.push_back(emb.colors[i]);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;

    int s = emb.pattern.size;
    switch (emb.pattern.kind) {
        case PatternKind::Star: {
            if (!emb.center || static_cast<int>(emb.edges.size()) != s) return false;
            std::vector<int> leaves;
            for (const Edge& e : emb.edges) {
                if (e.u != *emb.center && e.v != *emb.center) return false;
                leaves.push_back(e.u == *emb.center ? e.v : e.u);
            }
            std::sort(leaves.begin(), leaves.end());
            return std::adjacent_find(leaves.begin(), leaves.end()) == leaves.end();
        }
        case PatternKind::Matching: {
            if (static_cast<int>(emb.edges.size()) != s) return false;
            std::vector<int> ends;
            for (const Edge& e : emb.edges) {
                ends.push_back(e.u);
                ends.push_back(e.v);
            }
            std::sort(ends.begin(), ends.end());
            return std::adjacent_find(ends.begin(), ends.end()) == ends.end();
        }
        case PatternKind::Friendship: {
            if (!emb.center || static_cast<int>(emb.edges.size()) != 3 * s) return false;
            int v = *emb.center;
            std::vector<Edge> rim;
            std::vector<Edge> spokes;
            for (const Edge& e : emb.edges) {
                if (e.u == v || e.v == v) spokes.push_back(e);
                else rim.push_back(e);
            }
            if (static_cast<int>(rim.size()) != s || static_cast<int>(spokes.size()) != 2 * s)
                return false;
            std::vector<int> others;
            for (const Edge& e : rim) {
                others.push_back(e.u);
                others.push_back(e.v);
            }
            std::sort(others.begin(), others.end());
            if (std::adjacent_find(others.begin(), others.end()) != others.end()) return false;
            // every rim endpoint must carry its spoke
            std::vector<Edge> need;
            for (int w : others) need.emplace_back(v, w);
            std::sort(need.begin(), need.end());
            std::sort(spokes.begin(), spokes.end());
            return need == spokes;
        }
    }
    return false;
}

namespace {

std::vector<int> centers_by_color_richness(const EdgeColoring& c) {
    int n = c.host_order();
    std::vector<std::pair<int, int>> rank(n);
    std::vector<char> seen(static_cast<std::size_t>(c.colors_used()) + 1);
    for (int v = 0; v < n; ++v) {
        std::fill(seen.begin(), seen.end(), 0);
        int distinct = 0;
        for (int u = 0; u < n; ++u) {
            if (u == v) continue;
            int col = c.color(u, v);
            if (!seen[col]) {
                seen[col] = 1;
                ++distinct;
            }
        }
        rank[v] = {-distinct, v};
    }
    std::sort(rank.begin(), rank.end());
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = rank[i].second;
    return order;
}

} // namespace

std::optional<RainbowEmbedding> find_rainbow_star(const EdgeColoring& c, int s) {
    if (s < 1) throw std::invalid_argument("star size must be >= 1");
    int n = c.host_order();
    if (n < s + 1) return std::nullopt;
    for (int v : centers_by_color_richness(c)) {
        std::vector<char> used(static_cast<std::size_t>(c.colors_used()) + 1, 0);
        RainbowEmbedding emb;
        emb.pattern = {PatternKind::Star, s};
        emb.center = v;
        for (int u = 0; u < n && static_cast<int>(emb.edges.size()) < s; ++u) {
            if (u == v) continue;
            int col = c.color(u, v);
            if (used[col]) continue;
            used[col] = 1;
            emb.edges.emplace_back(u, v);
            emb.colors.push_back(col);
        }
        if (static_cast<int>(emb.edges.size()) == s) {
            if (!verify_embedding(c, emb)) throw std::logic_error("star search produced a bad embedding");
            return emb;
        }
    }
    return std::nullopt;
}

namespace {

bool matching_search(const std::vector<std::vector<Edge>>& classes, std::size_t idx, int still,
                     Bitset& used_vertices, std::vector<Edge>& chosen, std::vector<int>& colors) {
    if (still == 0) return true;
    if (idx >= classes.size() || classes.size() - idx < static_cast<std::size_t>(still))
        return false;
    // take one edge of this class...
    for (const Edge& e : classes[idx]) {
        if (used_vertices.test(e.u) || used_vertices.test(e.v)) continue;
        used_vertices.set(e.u);
        used_vertices.set(e.v);
        chosen.push_back(e);
        colors.push_back(static_cast<int>(idx) + 1);
        if (matching_search(classes, idx + 1, still - 1, used_vertices, chosen, colors))
            return true;
        chosen.pop_back();
        colors.pop_back();
        used_vertices.reset(e.u);
        used_vertices.reset(e.v);
    }
    // ...or skip it entirely
    return matching_search(classes, idx + 1, still, used_vertices, chosen, colors);
}

} // namespace

std::optional<RainbowEmbedding> find_rainbow_matching(const EdgeColoring& c, int s) {
    if (s < 1) throw std::invalid_argument("matching size must be >= 1");
    if (c.host_order() < 2 * s || c.colors_used() < s) return std::nullopt;
    auto classes = c.color_classes();
    Bitset used(c.host_order());
    std::vector<Edge> chosen;
    std::vector<int> colors;
    if (!matching_search(classes, 0, s, used, chosen, colors)) return std::nullopt;
    RainbowEmbedding emb;
    emb.pattern = {PatternKind::Matching, s};
    emb.edges = chosen;
    emb.colors = colors;
    if (!verify_embedding(c, emb)) throw std::logic_error("matching search produced a bad embedding");
    return emb;
}

namespace {

struct FanSearch {
    const EdgeColoring& c;
    int center;
    int target;
    std::vector<std::pair<int, int>> pairs; // candidate triangles (a, b)
    std::vector<char> used_color;
    Bitset used_vertex;
    std::vector<std::pair<int, int>> picked;

    FanSearch(const EdgeColoring& col, int v, int s)
        : c(col), center(v), target(s),
          used_color(static_cast<std::size_t>(col.colors_used()) + 1, 0),
          used_vertex(col.host_order()) {
        int n = col.host_order();
        for (int a = 0; a < n; ++a) {
            if (a == center) continue;
            for (int b = a + 1; b < n; ++b) {
                if (b == center) continue;
                pairs.emplace_back(a, b);
            }
        }
    }

    bool run(std::size_t start, int depth) {
        if (depth == target) return true;
        for (std::size_t i = start; i < pairs.size(); ++i) {
            auto [a, b] = pairs[i];
            if (used_vertex.test(a) || used_vertex.test(b)) continue;
            int c1 = c.color(center, a), c2 = c.color(center, b), c3 = c.color(a, b);
            if (c1 == c2 || c1 == c3 || c2 == c3) continue;
            if (used_color[c1] || used_color[c2] || used_color[c3]) continue;
            used_color[c1] = used_color[c2] = used_color[c3] = 1;
            used_vertex.set(a);
            used_vertex.set(b);
            picked.emplace_back(a, b);
            if (run(i + 1, depth + 1)) return true;
            picked.pop_back();
            used_vertex.reset(a);
            used_vertex.reset(b);
            used_color[c1] = used_color[c2] = used_color[c3] = 0;
        }
        return false;
    }
};

} // namespace

std::optional<RainbowEmbedding> find_rainbow_friendship(const EdgeColoring& c, int s) {
    if (s < 1) throw std::invalid_argument("fan size must be >= 1");
    int n = c.host_order();
    if (n < 2 * s + 1 || c.colors_used() < 3 * s) return std::nullopt;
    std::vector<char> seen(static_cast<std::size_t>(c.colors_used()) + 1);
    for (int v : centers_by_color_richness(c)) {
        // a rainbow s-fan needs 2s pairwise distinct spoke colors
        std::fill(seen.begin(), seen.end(), 0);
        int distinct = 0;
        for (int u = 0; u < n; ++u) {
            if (u == v) continue;
            int col = c.color(u, v);
            if (!seen[col]) {
                seen[col] = 1;
                ++distinct;
            }
        }
        if (distinct < 2 * s) continue;
        FanSearch search(c, v, s);
        if (!search.run(0, 0)) continue;
        RainbowEmbedding emb;
        emb.pattern = {PatternKind::Friendship, s};
        emb.center = v;
        for (auto [a, b] : search.picked) {
            emb.edges.emplace_back(v, a);
            emb.colors.push_back(c.color(v, a));
            emb.edges.emplace_back(v, b);
            emb.colors.push_back(c.color(v, b));
            emb.edges.emplace_back(a, b);
            emb.colors.push_back(c.color(a, b));
        }
        if (!verify_embedding(c, emb)) throw std::logic_error("fan search produced a bad embedding");
        return emb;
    }
    return std::nullopt;
}

std::optional<RainbowEmbedding> find_rainbow_in_family(const EdgeColoring& c,
                                                       std::vector<PatternSpec> family) {
    auto kind_rank = [](PatternKind k) {
        return k == PatternKind::Star ? 0 : k == PatternKind::Matching ? 1 : 2;
    };
    std::sort(family.begin(), family.end(), [&](const PatternSpec& a, const PatternSpec& b) {
        if (a.kind != b.kind) return kind_rank(a.kind) < kind_rank(b.kind);
        return a.size < b.size;
    });
    family.erase(std::unique(family.begin(), family.end()), family.end());
    for (const PatternSpec& p : family) {
        std::optional<RainbowEmbedding> hit;
        switch (p.kind) {
            case PatternKind::Star: hit = find_rainbow_star(c, p.size); break;
            case PatternKind::Matching: hit = find_rainbow_matching(c, p.size); break;
            case PatternKind::Friendship: hit = find_rainbow_friendship(c, p.size); break;
        }
        if (hit) return hit;
    }
    return std::nullopt;
}

} // namespace arlab

#include "arlab/graph_io.hpp"

#include <stdexcept>

namespace arlab {

namespace {

constexpr int kG6Lo = 63;   // printable offset
constexpr int kG6Hi = 126;

void append_bits(std::string& out, const std::vector<bool>& bits) {
    for (std::size_t i = 0; i < bits.size(); i += 6) {
        int b = 0;
        for (std::size_t j = 0; j < 6; ++j) {
            b <<= 1;
            if (i + j < bits.size() && bits[i + j]) b |= 1;
        }
        out.push_back(static_cast<char>(b + kG6Lo));
    }
}

} // namespace

std::string to_graph6(const Graph& g) {
    int n = g.order();
    if (n > 258047) throw std::invalid_argument("graph6 encoding limited to n <= 258047");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kG6Lo));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + kG6Lo));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kG6Lo));
        out.push_back(static_cast<char>((n & 63) + kG6Lo));
    }
    std::vector<bool> bits;
    bits.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) bits.push_back(g.has_edge(u, v));
    append_bits(out, bits);
    return out;
}

Graph from_graph6(const std::string& s) {
    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= s.size()) throw std::invalid_argument("truncated graph6 string");
        int c = static_cast<unsigned char>(s[pos++]);
        if (c < kG6Lo || c > kG6Hi) throw std::invalid_argument("invalid graph6 character");
        return c - kG6Lo;
    };
    if (s.empty()) throw std::invalid_argument("empty graph6 string");
    long long n;
    if (static_cast<unsigned char>(s[0]) == 126) {
        ++pos;
        if (pos < s.size() && static_cast<unsigned char>(s[pos]) == 126)
            throw std::invalid_argument("graph6 strings beyond 258047 vertices unsupported");
        long long a = next(), b = next(), c = next();
        n = (a << 12) | (b << 6) | c;
    } else {
        n = next();
    }
    Graph g(static_cast<int>(n));
    int have = 0, buf = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (have == 0) {
                buf = next();
                have = 6;
            }
            --have;
            if ((buf >> have) & 1) g.add_edge(u, v);
        }
    }
    return g;
}

nlohmann::ordered_json graph_to_json(const Graph& g) {
    nlohmann::ordered_json j;
    j["n"] = g.order();
    auto edges = nlohmann::ordered_json::array();
    for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
    j["edges"] = std::move(edges);
    return j;
}

Graph graph_from_json(const nlohmann::json& j) {
    Graph g(j.at("n").get<int>());
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("bad edge row");
        g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    return g;
}

Graph parse_graph(const std::string& text) {
    std::size_t i = text.find_first_not_of(" \t\r\n");
    if (i == std::string::npos) throw std::invalid_argument("empty graph input");
    if (text[i] == '{') return graph_from_json(nlohmann::json::parse(text));
    std::size_t end = text.find_first_of("\r\n", i);
    return from_graph6(text.substr(i, end == std::string::npos ? end : end - i));
}

} // namespace arlab

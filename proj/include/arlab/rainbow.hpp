#ifndef ARLAB_RAINBOW_HPP
#define ARLAB_RAINBOW_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "arlab/coloring.hpp"
#include "arlab/graph.hpp"

namespace arlab {

enum class PatternKind { Star, Matching, Friendship };

struct PatternSpec {
    PatternKind kind = PatternKind::Star;
    int size = 1; // edges of the star / matching / triangles of the fan
    bool operator==(const PatternSpec&) const = default;
};

// "K1,4" | "4K2" | "F3"; a family is a ';'-separated list of these.
PatternSpec parse_pattern(const std::string& text);
std::vector<PatternSpec> parse_pattern_family(const std::string& text);
std::string pattern_to_string(const PatternSpec& p);

// A found rainbow copy; always verified against the host coloring before
// being returned.
struct RainbowEmbedding {
    PatternSpec pattern;
    std::optional<int> center; // star / friendship
    std::vector<Edge> edges;
    std::vector<int> colors;

    nlohmann::ordered_json to_json() const;
};

bool verify_embedding(const EdgeColoring& c, const RainbowEmbedding& e);

// Exact searches. Deterministic: centers are scanned by descending count
// of distinct incident colors (ties by index); matchings branch over color
// classes by ascending index.
std::optional<RainbowEmbedding> find_rainbow_star(const EdgeColoring& c, int s);
std::optional<RainbowEmbedding> find_rainbow_matching(const EdgeColoring& c, int s);
std::optional<RainbowEmbedding> find_rainbow_friendship(const EdgeColoring& c, int s);

// First hit over the family in fixed order: stars, matchings, fans,
// ascending size within each kind.
std::optional<RainbowEmbedding> find_rainbow_in_family(const EdgeColoring& c,
                                                       std::vector<PatternSpec> family);

} // namespace arlab

#endif

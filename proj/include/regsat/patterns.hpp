#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "regsat/graph.hpp"

namespace regsat {

enum class PatternKind {
    clique,
    multipartite,
    cycle,
    path,
    matching,
    star,
    three_sun,
    derived_f_prime,
    custom,
};

struct PatternGraph {
    Graph graph;
    std::string name;
    PatternKind kind = PatternKind::custom;
    std::vector<int> params;  // kind-specific sizes (clique s, matching k, ...)
};

PatternGraph clique_pattern(int s);
PatternGraph multipartite_pattern(const std::vector<int>& sizes);
PatternGraph cycle_pattern(int n);
PatternGraph path_pattern(int n);        // n vertices
PatternGraph matching_pattern(int k);    // k edges on 2k vertices
PatternGraph star_pattern(int leaves);
// The 3-sun: triangle abc plus d,e,f, each adjacent to a distinct pair of
// triangle vertices (a,b,c,d,e,f -> 0..5).
PatternGraph three_sun_pattern();
PatternGraph custom_pattern(Graph g, std::string name);

// Kneser K(5,2): vertices are the 2-subsets of {0..4}, adjacent iff disjoint.
Graph petersen();

// F'_t: delete `removed_edge` (default: lexicographically first edge) from the
// base, blow the remainder up by K_t, then restore one edge between the first
// copies of the removed edge's endpoints. Intended for edge-transitive bases
// (not verified here); t = 1 degenerates to the base itself.
PatternGraph f_prime_t(const PatternGraph& base, int t,
                       std::optional<std::pair<int, int>> removed_edge = std::nullopt);

// Registry keys: K4, K3,3, C5, P4, M3, S4, E6, F6, petersen, Kprime:3:2.
PatternGraph pattern_from_key(const std::string& key);
// Composite graph expressions over the registry: "A+B" joins, "A[B]" blows up,
// parentheses group. Example: "(C5+E3)[E10]".
Graph graph_from_expression(const std::string& expr);

// Pattern file: first line is the name, rest is the edge-list format.
PatternGraph load_pattern_file(const std::string& text);
std::string save_pattern_file(const PatternGraph& p);

}  // namespace regsat

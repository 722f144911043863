#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "regsat/graph.hpp"
#include "regsat/patterns.hpp"

namespace regsat {

// Injective map pattern-vertex -> host-vertex; every pattern edge lands on a
// host edge (containment is not induced).
struct Embedding {
    std::vector<int> mapping;
};

// K_k in G; with `through`, the image must contain both endpoints of the given
// host edge. Deterministic: always returns the lexicographically first clique
// the ascending-candidate search reaches.
std::optional<Embedding> has_clique(const Graph& g, int k,
                                    std::optional<std::pair<int, int>> through = std::nullopt);

// Non-induced subgraph containment; with `through`, some pattern edge must map
// onto the given host edge (both orientations tried).
std::optional<Embedding> contains_subgraph(const Graph& g, const PatternGraph& pattern,
                                           std::optional<std::pair<int, int>> through = std::nullopt);

namespace detail {

// Same searches, but treat the (possibly absent) host pair {u,v} as an edge
// and require it in the image. Used by the saturation checkers to probe G+e
// without mutating G.
std::optional<Embedding> clique_with_pair(const Graph& g, int k, int u, int v);
std::optional<Embedding> subgraph_with_pair(const Graph& g, const PatternGraph& pattern,
                                            int u, int v);
// Dispatches clique patterns to the clique kernel.
bool creates_copy_with_pair(const Graph& g, const PatternGraph& pattern, int u, int v);

}  // namespace detail

}  // namespace regsat

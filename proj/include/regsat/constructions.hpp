#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "regsat/graph.hpp"

namespace regsat {

// ---- elementary builders ----

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph cycle_graph(int n);    // n >= 3
Graph path_graph(int n);     // n >= 1 vertices, n-1 edges
Graph star_graph(int leaves);    // center 0, `leaves` leaves
Graph matching_graph(int k);     // 2k vertices, k disjoint edges
Graph complete_multipartite(const std::vector<int>& sizes);

// ---- circulants ----

// Order n with connection set A of residues in [1, floor(n/2)]; vertex i is
// adjacent to i +- a (mod n) for every a in A.
struct CirculantSpec {
    int n = 0;
    std::set<int> connection;
};

Graph circulant(const CirculantSpec& spec);

// Triangle connection sets, one case per residue of n mod 10. Throws when n
// is even or the case formula yields y < 1 ("below case threshold").
CirculantSpec k3_connection_set(int n);

// n = 8k+6, k >= 1: A = {1,2} u {5,6} u ... u {4k+1,4k+2}.
CirculantSpec k4_connection_set(int n);

// ---- products ----

// Lexicographic product G[H]: vertex (u,i) -> index u*|H|+i; (u,i)~(v,j) iff
// uv in E(G), or u = v and ij in E(H).
Graph blow_up(const Graph& g, const Graph& h);

// Disjoint union plus all cross edges; G keeps indices 0..|G|-1.
Graph join(const Graph& g, const Graph& h);

// Common degree of join(G,H) when both inputs are regular and the balance
// d_H + |G| = d_G + |H| holds; absent otherwise.
std::optional<int> join_regular_degree(const Graph& g, const Graph& h);

// ---- witness for the regular-supergraph saturation number ----

struct RegRegWitness {
    Graph graph;
    int special_vertex = 0;
    long long constructed_vertex_count = 0;  // 1 + d^2 t, what the build yields
    long long stated_vertex_count = 0;       // 1 + (dt)^2, the count quoted alongside it
    std::vector<std::string> labels;
};

// dt-regular graph with a special vertex v whose neighborhood is d cliques of
// size t; every non-edge at v completes a K_{t+2}. Requires even d >= 2.
RegRegWitness regreg_witness(int t, int d);

}  // namespace regsat

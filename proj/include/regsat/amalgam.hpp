#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "regsat/checkers.hpp"
#include "regsat/graph.hpp"

namespace regsat {

// Exact fraction on 64-bit ints; inputs here stay far below overflow range.
struct Rational {
    long long num = 0;
    long long den = 1;

    static Rational make(long long n, long long d);
    Rational times(const Rational& o) const;
    bool leq(const Rational& o) const;
    bool operator==(const Rational&) const = default;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// The s-1 oriented 2-factors on the complete multipartite K_{q,...,q} with
// s+1 parts; vertex (part j, index i) -> j*q + i. Arc lists are one vector of
// (from, to) pairs per shift a = 0..s-2.
struct OrientedTwoFactorSet {
    int q = 0;
    int s = 0;
    std::vector<std::vector<std::pair<int, int>>> arcs;

    int vertex_count() const { return (s + 1) * q; }
};

// Shift-a factor: cycles v^0_b -> v^1_{b+a} -> ... -> v^s_{b+sa} -> v^0_b.
OrientedTwoFactorSet multipartite_two_factors(int q, int s);

// Validates the type invariants (per-shift in/out degree 1, pairwise
// edge-disjoint underlying factors) and then brute-forces the oriented
// K_{c,d} condition for every c+d = s+1.
VerificationReport verify_orientation_property(const OrientedTwoFactorSet& factors);

struct AmalgamParams {
    long long s = 0, t = 0;
    long long n_H = 0, d_H = 0;
    long long n_G = 0, d_G = 0;
};

struct SolveTResult {
    std::optional<long long> t;  // present iff the fraction is a positive integer
    Rational fraction;
};

// t = ((n_H - 1) d_G - s n_G) / (d_H - s); requires d_H > s.
SolveTResult solve_t(long long n_H, long long d_H, long long n_G, long long d_G, long long s);

// Construction H[s,t,G]: H-blobs of size t first (blob-major), then G-blobs of
// size |G|. Edges: the H blow-up, complete H-blob/G-blob links per vertex, the
// G pattern across distinct blob pairs, and the oriented-factor links.
Graph amalgamate(const Graph& h, const OrientedTwoFactorSet& factors, int s, int t,
                 const Graph& g);

std::vector<std::string> amalgam_labels(int h, int t, int g);

// Lemma-8 inequality: given the claimed n = n_H(t+n_G), d = st+(n_H-1)d_G,
// checks the hypothesis d_G/n_G >= s/(n_H-1) and d/n <= (n_H-1)/n_H * d_G/n_G.
VerificationReport ratio_check(const AmalgamParams& params, long long n, long long d);

struct PlanStep {
    int i = 0;
    long long n = 0, d = 0;
    long long t = 0;          // 0 for the seed row
    Rational ratio;           // d/n
    long long divisor = 1;    // (s(q-1))^(m-i) divisibility requirement
    bool verified = false;    // saturation re-checked exhaustively
};

struct Theorem3Plan {
    int s = 0, q = 0, m = 0;
    std::vector<PlanStep> steps;   // index 0 = F_0
    std::vector<Graph> graphs;     // F_0 .. F_m
    nlohmann::json to_json() const;
};

// F_0 = seed[E_{(s(q-1))^m}], then m amalgamation rounds against K_{q,...,q}.
// Seeds must be regular and K_{s+2}-saturated (re-verified). Graphs with at
// most `verify_limit` vertices get their saturation re-checked exhaustively.
Theorem3Plan theorem3_plan(int s, int q, const Graph& seed, int iterations,
                           int verify_limit = 1000);

}  // namespace regsat

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "regsat/graph.hpp"
#include "regsat/patterns.hpp"
#include "regsat/subgraph.hpp"

namespace regsat {

struct CheckOptions {
    enum class Mode { exhaustive, sampled };
    Mode mode = Mode::exhaustive;
    long long samples = 0;     // sampled mode: number of non-edges to draw
    std::uint64_t seed = 0;    // sampled mode: recorded RNG seed
    int workers = 0;           // 0 = REGSAT_WORKERS env or hardware concurrency
};

struct VerificationReport {
    std::string property;
    bool pass = false;
    std::string mode = "exhaustive";
    std::optional<std::vector<int>> witness_embedding;
    std::optional<std::pair<int, int>> witness_non_edge;
    std::optional<int> witness_vertex;
    nlohmann::json witness_extra;  // inequality sides, invariant violations, ...
    nlohmann::json parameters;
    double elapsed_ms = 0.0;

    bool has_witness() const {
        return witness_embedding || witness_non_edge || witness_vertex ||
               !witness_extra.is_null();
    }
    nlohmann::json to_json() const;
};

// Effective worker count: REGSAT_WORKERS if set, else hardware concurrency.
int worker_count(int requested = 0);

VerificationReport is_regular(const Graph& g);
VerificationReport is_free(const Graph& g, const PatternGraph& f, const CheckOptions& opt = {});
// F-free and every non-edge creates a copy through itself.
VerificationReport is_saturated(const Graph& g, const PatternGraph& f,
                                const CheckOptions& opt = {});
// Every non-edge creates a copy through itself; freeness not required.
VerificationReport is_oversaturated(const Graph& g, const PatternGraph& f,
                                    const CheckOptions& opt = {});
// Regular, F-free, and some vertex v has every incident non-edge creating a
// copy of F through it. Together with regularity this certifies that every
// regular proper supergraph contains F (each vertex's degree must grow).
VerificationReport rrsat_witness(const Graph& g, const PatternGraph& f,
                                 const CheckOptions& opt = {});

struct EdgeBoundDetail {
    int u = 0, v = 0;
    std::optional<int> cycle_length;  // shortest cycle through the edge
    std::optional<int> diameter;      // diameter of F minus this edge
};

struct BoundReport {
    std::optional<int> m;  // every edge on a cycle of length <= m+1
    std::optional<int> r;  // max over edges of diam(F \ e)
    std::vector<EdgeBoundDetail> per_edge;
    nlohmann::json to_json() const;
};

BoundReport prop2_bounds(const PatternGraph& f);

// Evaluates the applicable degree/order inequalities exactly:
//   m: n-d-1 <= d^m     r: n-d-1 <= d^r     t: d(d-1) >= t(n-d-1)
VerificationReport check_inequalities(long long n, long long d, std::optional<long long> m,
                                      std::optional<long long> r, std::optional<long long> t);

}  // namespace regsat

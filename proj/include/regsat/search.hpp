#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "regsat/graph.hpp"
#include "regsat/patterns.hpp"

namespace regsat {

struct EnumerationStats {
    long long labeled = 0;  // complete labeled graphs reached by the backtracker
    long long emitted = 0;  // graphs surviving the isomorph filter
};

// Emits at least one representative of every isomorphism class of d-regular
// graphs on n labeled vertices (the labeled backtracking is complete; the
// filter only removes graphs isomorphic to an earlier one). Odd n*d yields an
// empty stream. The emit callback returns false to stop early. Declared
// exhaustive limit: n <= 12.
void enumerate_regular(int n, int d, const std::function<bool(const Graph&)>& emit,
                       EnumerationStats* stats = nullptr);

struct DegreeOutcome {
    int d = 0;
    bool exists = false;
    std::optional<std::string> witness_g6;
    long long count_checked = 0;
};

struct SearchResult {
    int n = 0;
    std::string pattern_name;
    std::vector<DegreeOutcome> outcomes;        // one per feasible d (n*d even)
    std::optional<long long> rsat_value;        // min n*d/2 over passing d
    bool exhaustive = true;

    nlohmann::json to_json() const;
    static SearchResult from_json(const nlohmann::json& j);
};

struct SearchOptions {
    long long samples = 0;   // n > 12: random d-regular graphs per degree
    std::uint64_t seed = 0;
};

// Checks every feasible degree; witnesses are re-verified (regular + saturated)
// before being recorded. n <= 12 is the exhaustive regime; beyond that a
// positive sample count is required and `exhaustive` is reported false.
SearchResult find_regular_saturated(int n, const PatternGraph& f, const SearchOptions& opt = {});

// Append-only JSON-lines store keyed by (n, pattern); reruns are idempotent
// and stored witnesses are re-verified on load (corruption is a hard error
// naming the record).
std::vector<SearchResult> load_store(const std::string& path, const PatternGraph& f);
std::vector<SearchResult> rsat_table(int n_lo, int n_hi, const PatternGraph& f,
                                     const std::string& store_path,
                                     const SearchOptions& opt = {});

}  // namespace regsat

#include "regsat/search.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

#include "regsat/checkers.hpp"

namespace regsat {

namespace {

// Per-vertex invariant used both for the signature and to prune the
// isomorphism backtracker: (degree, triangles at v, distance histogram).
std::vector<std::vector<int>> vertex_invariants(const Graph& g) {
    const int n = g.order();
    std::vector<std::vector<int>> inv(n);
    auto [dist, diam] = distance_and_diameter(g);
    for (int v = 0; v < n; ++v) {
        int tri = 0;
        auto nbrs = g.neighbors(v);
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            for (std::size_t j = i + 1; j < nbrs.size(); ++j)
                if (g.has_edge(nbrs[i], nbrs[j])) ++tri;
        std::vector<int> hist(n + 2, 0);
        for (int w = 0; w < n; ++w) {
            int d = dist.at(v, w);
            ++hist[d == DistanceMatrix::unreachable ? n + 1 : d];
        }
        inv[v].push_back(static_cast<int>(nbrs.size()));
        inv[v].push_back(tri);
        inv[v].insert(inv[v].end(), hist.begin(), hist.end());
    }
    return inv;
}

std::string signature_of(const std::vector<std::vector<int>>& inv) {
    std::vector<std::vector<int>> sorted = inv;
    std::sort(sorted.begin(), sorted.end());
    std::ostringstream os;
    for (const auto& row : sorted) {
        for (int x : row) os << x << ',';
        os << ';';
    }
    return os.str();
}

bool isomorphic(const Graph& a, const std::vector<std::vector<int>>& inva, const Graph& b,
                const std::vector<std::vector<int>>& invb) {
    const int n = a.order();
    if (n != b.order()) return false;
    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    std::function<bool(int)> place = [&](int v) -> bool {
        if (v == n) return true;
        for (int w = 0; w < n; ++w) {
            if (used[w] || inva[v] != invb[w]) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (a.has_edge(u, v) != b.has_edge(map[u], w)) ok = false;
            if (!ok) continue;
            map[v] = w;
            used[w] = true;
            if (place(v + 1)) return true;
            used[w] = false;
            map[v] = -1;
        }
        return false;
    };
    return place(0);
}

// Keeps one representative per isomorphism class, bucketed by signature.
class IsoFilter {
public:
    bool is_new(const Graph& g) {
        auto inv = vertex_invariants(g);
        std::string sig = signature_of(inv);
        auto& bucket = reps_[sig];
        for (const auto& [rep, rep_inv] : bucket)
            if (isomorphic(g, inv, rep, rep_inv)) return false;
        bucket.emplace_back(g, std::move(inv));
        return true;
    }

private:
    std::map<std::string, std::vector<std::pair<Graph, std::vector<std::vector<int>>>>> reps_;
};

// Labeled backtracker over the pair sequence (0,1),(0,2),...,(n-2,n-1) with
// degree-slack pruning.
class RegularEnumerator {
public:
    RegularEnumerator(int n, int d, const std::function<bool(const Graph&)>& emit,
                      EnumerationStats* stats)
        : n_(n), d_(d), emit_(emit), stats_(stats), g_(n), deg_(n, 0) {}

    void run() {
        if (n_ == 0) {
            // the empty graph is vacuously d-regular only when there is
            // nothing to check; treat order 0 as a single empty emission
            ++count_labeled();
            if (filter_.is_new(g_)) {
                ++count_emitted();
                emit_(g_);
            }
            return;
        }
        descend(0, 1);
    }

private:
    long long& count_labeled() {
        static long long dummy;
        return stats_ ? stats_->labeled : dummy;
    }
    long long& count_emitted() {
        static long long dummy;
        return stats_ ? stats_->emitted : dummy;
    }

    bool descend(int i, int j) {
        if (stop_) return false;
        if (i == n_ - 1) {
            ++count_labeled();
            if (filter_.is_new(g_)) {
                ++count_emitted();
                if (!emit_(g_)) stop_ = true;
            }
            return !stop_;
        }
        int ni = (j == n_ - 1) ? i + 1 : i;
        int nj = (j == n_ - 1) ? i + 2 : j + 1;
        // feasibility bookkeeping for vertex j: undecided pairs touching j
        // after this one = rows i+1..j-1 plus row j itself
        int slots_j = (j - i - 1) + (n_ - 1 - j);
        int need_i = d_ - deg_[i];
        int need_j = d_ - deg_[j];
        int slots_i = n_ - j;  // pairs (i,j)..(i,n-1)
        // try the edge
        if (need_i > 0 && need_j > 0) {
            g_.add_edge(i, j);
            ++deg_[i];
            ++deg_[j];
            if (d_ - deg_[i] <= slots_i - 1) descend(ni, nj);
            --deg_[i];
            --deg_[j];
            g_.remove_edge(i, j);
        }
        if (stop_) return false;
        // try the non-edge
        if (need_i <= slots_i - 1 && need_j <= slots_j) descend(ni, nj);
        return !stop_;
    }

    int n_, d_;
    const std::function<bool(const Graph&)>& emit_;
    EnumerationStats* stats_;
    Graph g_;
    std::vector<int> deg_;
    IsoFilter filter_;
    bool stop_ = false;
};

}  // namespace

void enumerate_regular(int n, int d, const std::function<bool(const Graph&)>& emit,
                       EnumerationStats* stats) {
    if (n < 0) throw std::invalid_argument("enumerate_regular: negative order");
    if (d < 0 || (n == 0 ? d != 0 : d > n - 1))
        throw std::invalid_argument("enumerate_regular: need 0 <= d <= n-1");
    if (stats) *stats = {};
    if (static_cast<long long>(n) * d % 2 != 0) return;  // parity: empty stream
    RegularEnumerator en(n, d, emit, stats);
    en.run();
}

namespace {

bool verify_witness(const Graph& g, int n, int d, const PatternGraph& f) {
    if (g.order() != n) return false;
    auto s = degree_summary(g);
    if (!s.regular_degree || *s.regular_degree != d) return false;
    return is_saturated(g, f).pass;
}

std::optional<Graph> random_regular(int n, int d, std::mt19937_64& rng) {
    // pairing model with rejection
    std::vector<int> stubs;
    stubs.reserve(static_cast<std::size_t>(n) * d);
    for (int v = 0; v < n; ++v)
        for (int k = 0; k < d; ++k) stubs.push_back(v);
    for (int attempt = 0; attempt < 200; ++attempt) {
        std::shuffle(stubs.begin(), stubs.end(), rng);
        Graph g(n);
        bool ok = true;
        for (std::size_t i = 0; i + 1 < stubs.size() && ok; i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v || g.has_edge(u, v)) ok = false;
            else g.add_edge(u, v);
        }
        if (ok) return g;
    }
    return std::nullopt;
}

}  // namespace

SearchResult find_regular_saturated(int n, const PatternGraph& f, const SearchOptions& opt) {
    if (n < 1) throw std::invalid_argument("find_regular_saturated: need n >= 1");
    SearchResult res;
    res.n = n;
    res.pattern_name = f.name;
    res.exhaustive = n <= 12;
    if (!res.exhaustive && opt.samples <= 0)
        throw std::invalid_argument(
            "find_regular_saturated: n > 12 needs sampled mode (positive sample count)");
    std::mt19937_64 rng(opt.seed);
    for (int d = 0; d < std::max(n, 1); ++d) {
        if (static_cast<long long>(n) * d % 2 != 0) continue;
        DegreeOutcome out;
        out.d = d;
        if (res.exhaustive) {
            enumerate_regular(n, d, [&](const Graph& g) {
                ++out.count_checked;
                if (is_saturated(g, f).pass) {
                    if (!verify_witness(g, n, d, f))
                        throw std::logic_error("find_regular_saturated: witness re-verification failed");
                    out.exists = true;
                    out.witness_g6 = encode_graph6(g);
                    return false;
                }
                return true;
            });
        } else {
            for (long long k = 0; k < opt.samples && !out.exists; ++k) {
                auto g = random_regular(n, d, rng);
                if (!g) continue;
                ++out.count_checked;
                if (is_saturated(*g, f).pass && verify_witness(*g, n, d, f)) {
                    out.exists = true;
                    out.witness_g6 = encode_graph6(*g);
                }
            }
        }
        res.outcomes.push_back(std::move(out));
    }
    for (const auto& o : res.outcomes)
        if (o.exists) {
            long long edges = static_cast<long long>(n) * o.d / 2;
            if (!res.rsat_value || edges < *res.rsat_value) res.rsat_value = edges;
        }
    return res;
}

nlohmann::json SearchResult::to_json() const {
    nlohmann::json j;
    j["n"] = n;
    j["F"] = pattern_name;
    j["exhaustive"] = exhaustive;
    j["rsat"] = rsat_value ? nlohmann::json(*rsat_value) : nlohmann::json(nullptr);
    j["outcomes"] = nlohmann::json::array();
    for (const auto& o : outcomes) {
        nlohmann::json e;
        e["d"] = o.d;
        e["exists"] = o.exists;
        e["witness"] = o.witness_g6 ? nlohmann::json(*o.witness_g6) : nlohmann::json(nullptr);
        e["count_checked"] = o.count_checked;
        j["outcomes"].push_back(e);
    }
    return j;
}

SearchResult SearchResult::from_json(const nlohmann::json& j) {
    SearchResult r;
    r.n = j.at("n").get<int>();
    r.pattern_name = j.at("F").get<std::string>();
    r.exhaustive = j.at("exhaustive").get<bool>();
    if (!j.at("rsat").is_null()) r.rsat_value = j.at("rsat").get<long long>();
    for (const auto& e : j.at("outcomes")) {
        DegreeOutcome o;
        o.d = e.at("d").get<int>();
        o.exists = e.at("exists").get<bool>();
        if (!e.at("witness").is_null()) o.witness_g6 = e.at("witness").get<std::string>();
        o.count_checked = e.at("count_checked").get<long long>();
        r.outcomes.push_back(std::move(o));
    }
    return r;
}

std::vector<SearchResult> load_store(const std::string& path, const PatternGraph& f) {
    std::vector<SearchResult> out;
    std::ifstream in(path);
    if (!in) return out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        SearchResult r;
        try {
            r = SearchResult::from_json(nlohmann::json::parse(line));
        } catch (const std::exception& e) {
            throw std::runtime_error("store " + path + " line " + std::to_string(lineno) +
                                     ": unparseable record: " + e.what());
        }
        if (r.pattern_name != f.name) {
            out.push_back(std::move(r));
            continue;
        }
        for (const auto& o : r.outcomes) {
            if (!o.exists) continue;
            if (!o.witness_g6)
                throw std::runtime_error("store record n=" + std::to_string(r.n) + " d=" +
                                         std::to_string(o.d) + " F=" + r.pattern_name +
                                         ": exists without witness");
            Graph g = decode_graph6(*o.witness_g6);
            if (!verify_witness(g, r.n, o.d, f))
                throw std::runtime_error("store record n=" + std::to_string(r.n) + " d=" +
                                         std::to_string(o.d) + " F=" + r.pattern_name +
                                         ": witness failed re-verification");
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<SearchResult> rsat_table(int n_lo, int n_hi, const PatternGraph& f,
                                     const std::string& store_path, const SearchOptions& opt) {
    auto existing = load_store(store_path, f);
    std::map<int, const SearchResult*> have;
    for (const auto& r : existing)
        if (r.pattern_name == f.name) have[r.n] = &r;
    std::vector<SearchResult> out;
    std::ofstream append(store_path, std::ios::app);
    for (int n = n_lo; n <= n_hi; ++n) {
        if (auto it = have.find(n); it != have.end()) {
            out.push_back(*it->second);
            continue;
        }
        SearchResult r = find_regular_saturated(n, f, opt);
        append << r.to_json().dump() << '\n';
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace regsat

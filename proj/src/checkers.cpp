#include "regsat/checkers.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace regsat {

namespace {

using Clock = std::chrono::steady_clock;

struct Timer {
    Clock::time_point start = Clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    }
};

nlohmann::json witness_json(const VerificationReport& r) {
    if (r.witness_embedding) return {{"kind", "embedding"}, {"mapping", *r.witness_embedding}};
    if (r.witness_non_edge)
        return {{"kind", "non_edge"},
                {"pair", {r.witness_non_edge->first, r.witness_non_edge->second}},
                {"extra", r.witness_extra}};
    if (r.witness_vertex) return {{"kind", "vertex"}, {"vertex", *r.witness_vertex},
                                  {"extra", r.witness_extra}};
    if (!r.witness_extra.is_null()) return r.witness_extra;
    return nullptr;
}

std::string sampled_mode_string(long long samples, std::uint64_t seed) {
    return "sampled(" + std::to_string(samples) + "," + std::to_string(seed) + ")";
}

nlohmann::json base_params(const Graph& g, const PatternGraph& f) {
    nlohmann::json p;
    p["n"] = g.order();
    p["edges"] = g.edge_count();
    p["pattern"] = f.name;
    return p;
}

constexpr std::uint64_t encode_pair(int i, int j) {
    return (static_cast<std::uint64_t>(i) << 32) | static_cast<std::uint32_t>(j);
}

// Scans every non-edge and requires a copy of F through it. Rows are handed
// to workers in ascending order; the recorded failure is the lexicographically
// smallest one regardless of interleaving.
struct ScanResult {
    std::optional<std::pair<int, int>> first_fail;
    long long checked = 0;
};

ScanResult scan_all_non_edges(const Graph& g, const PatternGraph& f, int workers) {
    std::atomic<int> next_row{0};
    std::atomic<std::uint64_t> best_fail{~std::uint64_t(0)};
    std::atomic<long long> checked{0};
    auto work = [&]() {
        long long local_checked = 0;
        for (;;) {
            int i = next_row.fetch_add(1);
            if (i >= g.order()) break;
            if (static_cast<std::uint64_t>(i) << 32 > best_fail.load()) continue;
            for (int j = i + 1; j < g.order(); ++j) {
                if (g.has_edge(i, j)) continue;
                ++local_checked;
                if (!detail::creates_copy_with_pair(g, f, i, j)) {
                    std::uint64_t enc = encode_pair(i, j);
                    std::uint64_t cur = best_fail.load();
                    while (enc < cur && !best_fail.compare_exchange_weak(cur, enc)) {
                    }
                    break;  // later pairs in this row are lexicographically larger
                }
            }
        }
        checked.fetch_add(local_checked);
    };
    int w = std::max(1, workers);
    std::vector<std::thread> pool;
    for (int i = 1; i < w; ++i) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    ScanResult r;
    r.checked = checked.load();
    std::uint64_t enc = best_fail.load();
    if (enc != ~std::uint64_t(0))
        r.first_fail = {static_cast<int>(enc >> 32), static_cast<int>(enc & 0xffffffffu)};
    return r;
}

ScanResult scan_sampled_non_edges(const Graph& g, const PatternGraph& f, long long samples,
                                  std::uint64_t seed, int workers) {
    if (g.order() < 2) return {};
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, g.order() - 1);
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::pair<int, int>> chosen;
    long long attempts_left = samples * 200 + 1000;
    while (static_cast<long long>(chosen.size()) < samples && attempts_left-- > 0) {
        int i = pick(rng), j = pick(rng);
        if (i == j) continue;
        if (i > j) std::swap(i, j);
        if (g.has_edge(i, j)) continue;
        if (!seen.insert(encode_pair(i, j)).second) continue;
        chosen.emplace_back(i, j);
    }
    std::atomic<std::size_t> next{0};
    std::atomic<std::uint64_t> best_fail{~std::uint64_t(0)};
    auto work = [&]() {
        for (;;) {
            std::size_t idx = next.fetch_add(1);
            if (idx >= chosen.size()) break;
            auto [i, j] = chosen[idx];
            if (!detail::creates_copy_with_pair(g, f, i, j)) {
                std::uint64_t enc = encode_pair(i, j);
                std::uint64_t cur = best_fail.load();
                while (enc < cur && !best_fail.compare_exchange_weak(cur, enc)) {
                }
            }
        }
    };
    int w = std::max(1, workers);
    std::vector<std::thread> pool;
    for (int i = 1; i < w; ++i) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    ScanResult r;
    r.checked = static_cast<long long>(chosen.size());
    std::uint64_t enc = best_fail.load();
    if (enc != ~std::uint64_t(0))
        r.first_fail = {static_cast<int>(enc >> 32), static_cast<int>(enc & 0xffffffffu)};
    return r;
}

// Per-root ascending clique extension; cand holds the allowed vertices above
// the last chosen one.
class RootedCliqueSearch {
public:
    RootedCliqueSearch(const Graph& g, int k)
        : g_(g), stride_(g.stride()), bufs_(static_cast<std::size_t>(k) * stride_) {}

    std::vector<int> stack;

    bool extend(const std::uint64_t* cand, int need, int depth) {
        if (need == 0) return true;
        if (need == 1) {
            int w = first_bit(cand, stride_);
            if (w < 0) return false;
            stack.push_back(w);
            return true;
        }
        if (popcount_words(cand, stride_) < need) return false;
        std::uint64_t* child = bufs_.data() + static_cast<std::size_t>(depth) * stride_;
        for (int w = first_bit(cand, stride_); w >= 0; w = next_bit(cand, stride_, w + 1)) {
            if (need == 2) {
                if (!intersects_above(cand, g_.row(w), stride_, w)) continue;
                and_rows_above(child, cand, g_.row(w), stride_, w);
                stack.push_back(w);
                stack.push_back(first_bit(child, stride_));
                return true;
            }
            if (!and_rows_above(child, cand, g_.row(w), stride_, w)) continue;
            stack.push_back(w);
            if (extend(child, need - 1, depth + 1)) return true;
            stack.pop_back();
        }
        return false;
    }

private:
    const Graph& g_;
    int stride_;
    std::vector<std::uint64_t> bufs_;
};

// Parallel clique existence over the smallest clique vertex; deterministic:
// roots are handed out in ascending order and the winner is the smallest root
// that carries a clique (its extension search is itself deterministic).
std::optional<Embedding> parallel_clique_find(const Graph& g, int k, int workers) {
    if (k == 1) return g.order() ? std::optional<Embedding>(Embedding{{0}}) : std::nullopt;
    std::atomic<int> counter{0};
    std::atomic<int> best_u{g.order()};
    std::vector<std::optional<Embedding>> found(static_cast<std::size_t>(g.order()) + 1);
    auto run = [&]() {
        RootedCliqueSearch search(g, k);
        std::vector<std::uint64_t> top(g.stride());
        for (;;) {
            int u = counter.fetch_add(1);
            if (u + k > g.order()) break;
            if (u > best_u.load()) continue;
            if (!and_rows_above(top.data(), g.row(u), g.row(u), g.stride(), u)) continue;
            search.stack.assign(1, u);
            if (search.extend(top.data(), k - 1, 0)) {
                int cur = best_u.load();
                while (u < cur && !best_u.compare_exchange_weak(cur, u)) {
                }
                if (best_u.load() == u) found[u] = Embedding{search.stack};
            }
        }
    };
    int w = std::max(1, workers);
    std::vector<std::thread> pool;
    for (int i = 1; i < w; ++i) pool.emplace_back(run);
    run();
    for (auto& t : pool) t.join();
    int u = best_u.load();
    if (u < g.order() && found[u]) return *found[u];
    return std::nullopt;
}

std::optional<Embedding> find_copy(const Graph& g, const PatternGraph& f, int workers) {
    if (f.kind == PatternKind::clique) return parallel_clique_find(g, f.params[0], workers);
    return contains_subgraph(g, f);
}

}  // namespace

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json j;
    j["property"] = property;
    j["pass"] = pass;
    j["mode"] = mode;
    j["witness"] = witness_json(*this);
    j["parameters"] = parameters;
    j["elapsed_ms"] = elapsed_ms;
    return j;
}

int worker_count(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("REGSAT_WORKERS")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    unsigned hc = std::thread::hardware_concurrency();
    return hc ? static_cast<int>(hc) : 1;
}

VerificationReport is_regular(const Graph& g) {
    Timer t;
    VerificationReport r;
    r.property = "regular";
    auto s = degree_summary(g);
    r.parameters["n"] = g.order();
    r.parameters["edges"] = s.edge_count;
    if (g.order() == 0) {
        r.pass = true;  // vacuously regular
    } else if (s.regular_degree) {
        r.pass = true;
        r.parameters["d"] = *s.regular_degree;
    } else {
        r.pass = false;
        int lo = 0, hi = 0;
        for (int v = 1; v < g.order(); ++v) {
            if (s.degrees[v] < s.degrees[lo]) lo = v;
            if (s.degrees[v] > s.degrees[hi]) hi = v;
        }
        r.witness_vertex = lo;
        r.witness_extra = {{"degree_min", s.degrees[lo]},
                           {"degree_max", s.degrees[hi]},
                           {"vertex_min", lo},
                           {"vertex_max", hi}};
    }
    r.elapsed_ms = t.ms();
    return r;
}

VerificationReport is_free(const Graph& g, const PatternGraph& f, const CheckOptions& opt) {
    Timer t;
    VerificationReport r;
    r.property = "free";
    r.parameters = base_params(g, f);
    auto copy = find_copy(g, f, worker_count(opt.workers));
    if (copy) {
        r.pass = false;
        r.witness_embedding = copy->mapping;
    } else {
        r.pass = true;
    }
    r.elapsed_ms = t.ms();
    return r;
}

namespace {

VerificationReport saturation_scan(const Graph& g, const PatternGraph& f,
                                   const CheckOptions& opt, bool require_free,
                                   const char* property) {
    Timer t;
    VerificationReport r;
    r.property = property;
    r.parameters = base_params(g, f);
    int workers = worker_count(opt.workers);
    if (require_free) {
        auto copy = find_copy(g, f, workers);
        if (copy) {
            r.pass = false;
            r.witness_embedding = copy->mapping;
            r.elapsed_ms = t.ms();
            return r;
        }
    }
    ScanResult scan;
    if (opt.mode == CheckOptions::Mode::sampled) {
        if (opt.samples <= 0)
            throw std::invalid_argument("sampled mode requires a positive sample count");
        scan = scan_sampled_non_edges(g, f, opt.samples, opt.seed, workers);
        r.mode = sampled_mode_string(scan.checked, opt.seed);
    } else {
        scan = scan_all_non_edges(g, f, workers);
        r.mode = "exhaustive";
    }
    r.parameters["non_edges_checked"] = scan.checked;
    if (scan.first_fail) {
        r.pass = false;
        r.witness_non_edge = scan.first_fail;
    } else {
        r.pass = true;
    }
    r.elapsed_ms = t.ms();
    return r;
}

}  // namespace

VerificationReport is_saturated(const Graph& g, const PatternGraph& f, const CheckOptions& opt) {
    return saturation_scan(g, f, opt, /*require_free=*/true, "saturated");
}

VerificationReport is_oversaturated(const Graph& g, const PatternGraph& f,
                                    const CheckOptions& opt) {
    return saturation_scan(g, f, opt, /*require_free=*/false, "oversaturated");
}

VerificationReport rrsat_witness(const Graph& g, const PatternGraph& f, const CheckOptions& opt) {
    Timer t;
    VerificationReport r;
    r.property = "rrsat_witness";
    r.parameters = base_params(g, f);
    auto reg = is_regular(g);
    if (!reg.pass) {
        r.pass = false;
        r.witness_vertex = reg.witness_vertex;
        r.witness_extra = {{"reason", "not regular"}, {"degrees", reg.witness_extra}};
        r.elapsed_ms = t.ms();
        return r;
    }
    r.parameters["d"] = reg.parameters["d"];
    int workers = worker_count(opt.workers);
    auto copy = find_copy(g, f, workers);
    if (copy) {
        r.pass = false;
        r.witness_embedding = copy->mapping;
        r.witness_extra = {{"reason", "not F-free"}};
        r.elapsed_ms = t.ms();
        return r;
    }
    int best_vertex = -1;
    long long best_created = -1;
    std::pair<int, int> best_fail{-1, -1};
    for (int v = 0; v < g.order(); ++v) {
        long long created = 0;
        std::optional<std::pair<int, int>> fail;
        for (int w = 0; w < g.order(); ++w) {
            if (w == v || g.has_edge(v, w)) continue;
            if (detail::creates_copy_with_pair(g, f, std::min(v, w), std::max(v, w))) {
                ++created;
            } else {
                fail = {std::min(v, w), std::max(v, w)};
                break;
            }
        }
        if (!fail) {
            r.pass = true;
            r.witness_vertex = v;
            r.witness_extra = {{"non_edges_at_vertex", created}};
            r.elapsed_ms = t.ms();
            return r;
        }
        if (created > best_created) {
            best_created = created;
            best_vertex = v;
            best_fail = *fail;
        }
    }
    r.pass = false;
    if (best_vertex >= 0) {
        r.witness_vertex = best_vertex;
        r.witness_extra = {{"reason", "no vertex covers all incident non-edges"},
                           {"best_vertex", best_vertex},
                           {"created", best_created},
                           {"failing_non_edge", {best_fail.first, best_fail.second}}};
    }
    r.elapsed_ms = t.ms();
    return r;
}

BoundReport prop2_bounds(const PatternGraph& f) {
    BoundReport rep;
    const Graph& g = f.graph;
    bool all_cycles = true, all_connected = true;
    int max_cycle = 0, max_diam = 0;
    bool any_edge = false;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v) {
            if (!g.has_edge(u, v)) continue;
            any_edge = true;
            Graph cut = g;
            cut.remove_edge(u, v);
            auto [dist, diam] = distance_and_diameter(cut);
            EdgeBoundDetail d;
            d.u = u;
            d.v = v;
            if (dist.at(u, v) != DistanceMatrix::unreachable) {
                d.cycle_length = dist.at(u, v) + 1;
                max_cycle = std::max(max_cycle, *d.cycle_length);
            } else {
                all_cycles = false;
            }
            if (diam) {
                d.diameter = *diam;
                max_diam = std::max(max_diam, *diam);
            } else {
                all_connected = false;
            }
            rep.per_edge.push_back(d);
        }
    if (any_edge && all_cycles) rep.m = max_cycle - 1;
    if (any_edge && all_connected) rep.r = max_diam;
    return rep;
}

nlohmann::json BoundReport::to_json() const {
    nlohmann::json j;
    j["m"] = m ? nlohmann::json(*m) : nlohmann::json(nullptr);
    j["r"] = r ? nlohmann::json(*r) : nlohmann::json(nullptr);
    j["per_edge"] = nlohmann::json::array();
    for (const auto& d : per_edge) {
        nlohmann::json e;
        e["edge"] = {d.u, d.v};
        e["cycle_length"] = d.cycle_length ? nlohmann::json(*d.cycle_length) : nullptr;
        e["diameter"] = d.diameter ? nlohmann::json(*d.diameter) : nullptr;
        j["per_edge"].push_back(e);
    }
    return j;
}

namespace {

// d^e with saturation above the 128-bit range; verdicts stay exact because
// every left-hand side in use fits comfortably below the saturation point.
struct Power {
    unsigned __int128 value = 0;
    bool saturated = false;
};

Power checked_pow(long long base, long long exp) {
    Power p;
    p.value = 1;
    constexpr unsigned __int128 cap = ~static_cast<unsigned __int128>(0) >> 1;
    for (long long i = 0; i < exp; ++i) {
        if (base != 0 && p.value > cap / static_cast<unsigned __int128>(base)) {
            p.saturated = true;
            return p;
        }
        p.value *= static_cast<unsigned __int128>(base);
    }
    return p;
}

std::string u128_to_string(unsigned __int128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v > 0) {
        s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    return s;
}

}  // namespace

VerificationReport check_inequalities(long long n, long long d, std::optional<long long> m,
                                      std::optional<long long> r, std::optional<long long> t) {
    if (!(n > d && d >= 0)) throw std::invalid_argument("check_inequalities: need n > d >= 0");
    Timer timer;
    VerificationReport rep;
    rep.property = "inequality";
    rep.parameters = {{"n", n}, {"d", d}};
    if (m) rep.parameters["m"] = *m;
    if (r) rep.parameters["r"] = *r;
    if (t) rep.parameters["t"] = *t;
    nlohmann::json checks = nlohmann::json::array();
    bool all = true;
    auto add_power_check = [&](const std::string& name, long long e) {
        unsigned __int128 lhs = static_cast<unsigned __int128>(n - d - 1);
        Power rhs = checked_pow(d, e);
        bool ok = rhs.saturated || lhs <= rhs.value;
        checks.push_back({{"name", name},
                          {"lhs", u128_to_string(lhs)},
                          {"rhs", rhs.saturated ? "overflow(>2^127)" : u128_to_string(rhs.value)},
                          {"pass", ok}});
        all = all && ok;
    };
    if (m) add_power_check("n-d-1 <= d^m", *m);
    if (r) add_power_check("n-d-1 <= d^r", *r);
    if (t) {
        unsigned __int128 lhs = static_cast<unsigned __int128>(d) * static_cast<unsigned __int128>(d - 1 >= 0 ? d - 1 : 0);
        unsigned __int128 rhs = static_cast<unsigned __int128>(*t) * static_cast<unsigned __int128>(n - d - 1);
        bool ok = lhs >= rhs;
        checks.push_back({{"name", "d(d-1) >= t(n-d-1)"},
                          {"lhs", u128_to_string(lhs)},
                          {"rhs", u128_to_string(rhs)},
                          {"pass", ok}});
        all = all && ok;
    }
    rep.parameters["inequalities"] = checks;
    rep.pass = all;
    if (!all) rep.witness_extra = {{"inequalities", checks}};
    rep.elapsed_ms = timer.ms();
    return rep;
}

}  // namespace regsat

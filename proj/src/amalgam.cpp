#include "regsat/amalgam.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "regsat/constructions.hpp"

namespace regsat {

Rational Rational::make(long long n, long long d) {
    if (d == 0) throw std::invalid_argument("Rational: zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    long long g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0) g = 1;
    return {n / g, d / g};
}

Rational Rational::times(const Rational& o) const { return make(num * o.num, den * o.den); }

bool Rational::leq(const Rational& o) const { return num * o.den <= o.num * den; }

OrientedTwoFactorSet multipartite_two_factors(int q, int s) {
    if (q < 1) throw std::invalid_argument("multipartite_two_factors: need q >= 1");
    if (s < 1) throw std::invalid_argument("multipartite_two_factors: need s >= 1");
    OrientedTwoFactorSet out;
    out.q = q;
    out.s = s;
    auto vertex = [&](int part, int idx) { return part * q + ((idx % q) + q) % q; };
    for (int a = 0; a <= s - 2; ++a) {
        std::vector<std::pair<int, int>> arcs;
        arcs.reserve(static_cast<std::size_t>(s + 1) * q);
        for (int b = 0; b < q; ++b) {
            for (int j = 0; j < s; ++j)
                arcs.emplace_back(vertex(j, b + j * a), vertex(j + 1, b + (j + 1) * a));
            arcs.emplace_back(vertex(s, b + s * a), vertex(0, b));
        }
        out.arcs.push_back(std::move(arcs));
    }
    return out;
}

namespace {

// Returns a failure report fragment if the type invariants are violated.
std::optional<nlohmann::json> factor_invariant_violation(const OrientedTwoFactorSet& f) {
    const int n = f.vertex_count();
    std::set<std::pair<int, int>> seen_undirected;
    for (std::size_t shift = 0; shift < f.arcs.size(); ++shift) {
        std::vector<int> indeg(n, 0), outdeg(n, 0);
        for (auto [from, to] : f.arcs[shift]) {
            if (from < 0 || from >= n || to < 0 || to >= n || from == to)
                return nlohmann::json{{"reason", "arc endpoint out of range"},
                                      {"shift", shift},
                                      {"arc", {from, to}}};
            ++outdeg[from];
            ++indeg[to];
            auto e = std::minmax(from, to);
            if (!seen_undirected.insert({e.first, e.second}).second)
                return nlohmann::json{{"reason", "underlying edges not pairwise disjoint"},
                                      {"shift", shift},
                                      {"edge", {e.first, e.second}}};
        }
        for (int v = 0; v < n; ++v)
            if (indeg[v] != 1 || outdeg[v] != 1)
                return nlohmann::json{{"reason", "shift is not a spanning union of cycles"},
                                      {"shift", shift},
                                      {"vertex", v},
                                      {"in", indeg[v]},
                                      {"out", outdeg[v]}};
    }
    return std::nullopt;
}

}  // namespace

VerificationReport verify_orientation_property(const OrientedTwoFactorSet& factors) {
    VerificationReport r;
    r.property = "orientation";
    r.parameters = {{"q", factors.q}, {"s", factors.s},
                    {"factors", factors.arcs.size()}};
    if (static_cast<int>(factors.arcs.size()) != std::max(factors.s - 1, 0)) {
        r.pass = false;
        r.witness_extra = {{"reason", "expected s-1 factors"},
                           {"got", factors.arcs.size()}};
        return r;
    }
    if (auto violation = factor_invariant_violation(factors)) {
        r.pass = false;
        r.witness_extra = *violation;
        return r;
    }
    const int n = factors.vertex_count();
    const int s = factors.s;
    std::vector<std::vector<int>> out_nbrs(n), in_nbrs(n);
    for (const auto& shift : factors.arcs)
        for (auto [from, to] : shift) {
            out_nbrs[from].push_back(to);
            in_nbrs[to].push_back(from);
        }
    // A violating K_{c,d} directed into the d-side needs c sources sharing d
    // common out-neighbours. Any such source set lies inside the in-neighbour
    // list of a witness target, which has at most s-1 entries: enumerate those
    // subsets and intersect their out-neighbourhoods.
    for (int c = 1; c <= s; ++c) {
        int d = s + 1 - c;
        for (int w = 0; w < n; ++w) {
            const auto& sources = in_nbrs[w];
            if (static_cast<int>(sources.size()) < c) continue;
            std::vector<int> pick(c);
            std::vector<int> idx(c);
            std::iota(idx.begin(), idx.end(), 0);
            // enumerate c-subsets of `sources`
            for (;;) {
                for (int i = 0; i < c; ++i) pick[i] = sources[idx[i]];
                std::vector<int> common = out_nbrs[pick[0]];
                std::sort(common.begin(), common.end());
                for (int i = 1; i < c && !common.empty(); ++i) {
                    std::vector<int> next = out_nbrs[pick[i]];
                    std::sort(next.begin(), next.end());
                    std::vector<int> tmp;
                    std::set_intersection(common.begin(), common.end(), next.begin(), next.end(),
                                          std::back_inserter(tmp));
                    common = std::move(tmp);
                }
                if (static_cast<int>(common.size()) >= d) {
                    r.pass = false;
                    common.resize(d);
                    r.witness_extra = {{"c", c},
                                       {"d", d},
                                       {"sources", pick},
                                       {"targets", common}};
                    return r;
                }
                // next combination
                int i = c - 1;
                while (i >= 0 && idx[i] == static_cast<int>(sources.size()) - c + i) --i;
                if (i < 0) break;
                ++idx[i];
                for (int j = i + 1; j < c; ++j) idx[j] = idx[j - 1] + 1;
            }
        }
    }
    r.pass = true;
    return r;
}

SolveTResult solve_t(long long n_H, long long d_H, long long n_G, long long d_G, long long s) {
    if (d_H <= s) throw std::invalid_argument("solve_t: need d_H > s");
    SolveTResult out;
    out.fraction = Rational::make((n_H - 1) * d_G - s * n_G, d_H - s);
    if (out.fraction.den == 1 && out.fraction.num > 0) out.t = out.fraction.num;
    return out;
}

Graph amalgamate(const Graph& h, const OrientedTwoFactorSet& factors, int s, int t,
                 const Graph& g) {
    if (t < 1) throw std::invalid_argument("amalgamate: need t >= 1");
    if (s < 1) throw std::invalid_argument("amalgamate: need s >= 1");
    const int nh = h.order(), ng = g.order();
    if (static_cast<int>(factors.arcs.size()) != s - 1)
        throw std::invalid_argument("amalgamate: factor set must supply s-1 oriented 2-factors");
    if (s > 1 && factors.vertex_count() != nh)
        throw std::invalid_argument("amalgamate: factor set lives on " +
                                    std::to_string(factors.vertex_count()) +
                                    " vertices but H has " + std::to_string(nh));
    if (auto violation = factor_invariant_violation(factors))
        throw std::invalid_argument("amalgamate: invalid factor set: " +
                                    violation->at("reason").get<std::string>());
    for (const auto& shift : factors.arcs)
        for (auto [from, to] : shift)
            if (!h.has_edge(from, to))
                throw std::invalid_argument("amalgamate: factor arc (" + std::to_string(from) +
                                            "," + std::to_string(to) + ") is not an edge of H");
    Graph out(nh * t + nh * ng);
    auto hb = [&](int j, int i) { return j * t + i; };            // H-blob of u_j
    auto gb = [&](int b, int a) { return nh * t + b * ng + a; };  // G-blob of u_b
    // (1) H blow-up among the H-blobs
    for (int j = 0; j < nh; ++j)
        for (int j2 = j + 1; j2 < nh; ++j2) {
            if (!h.has_edge(j, j2)) continue;
            for (int i = 0; i < t; ++i)
                for (int i2 = 0; i2 < t; ++i2) out.add_edge(hb(j, i), hb(j2, i2));
        }
    // (2) complete links between the H-blob and G-blob of the same vertex
    for (int j = 0; j < nh; ++j)
        for (int i = 0; i < t; ++i)
            for (int a = 0; a < ng; ++a) out.add_edge(hb(j, i), gb(j, a));
    // (3) the G pattern across every ordered pair of distinct blobs
    for (int b = 0; b < nh; ++b)
        for (int b2 = b + 1; b2 < nh; ++b2)
            for (int a = 0; a < ng; ++a)
                for (int a2 = 0; a2 < ng; ++a2)
                    if (g.has_edge(a, a2)) out.add_edge(gb(b, a), gb(b2, a2));
    // (4) oriented factor links: arc u_j -> u_j' joins the H-blob of u_j to
    // the G-blob of u_j'
    for (const auto& shift : factors.arcs)
        for (auto [from, to] : shift)
            for (int i = 0; i < t; ++i)
                for (int a = 0; a < ng; ++a) out.add_edge(hb(from, i), gb(to, a));
    return out;
}

std::vector<std::string> amalgam_labels(int h, int t, int g) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(h) * (t + g));
    for (int j = 0; j < h; ++j)
        for (int i = 0; i < t; ++i)
            labels.push_back("u" + std::to_string(j + 1) + "_" + std::to_string(i + 1));
    for (int b = 0; b < h; ++b)
        for (int a = 0; a < g; ++a)
            labels.push_back("v" + std::to_string(b + 1) + "_" + std::to_string(a + 1));
    return labels;
}

VerificationReport ratio_check(const AmalgamParams& p, long long n, long long d) {
    VerificationReport r;
    r.property = "inequality";
    r.parameters = {{"s", p.s}, {"t", p.t}, {"n_H", p.n_H}, {"d_H", p.d_H},
                    {"n_G", p.n_G}, {"d_G", p.d_G}, {"n", n}, {"d", d}};
    if (n != p.n_H * (p.t + p.n_G) || d != p.s * p.t + (p.n_H - 1) * p.d_G)
        throw std::invalid_argument("ratio_check: n,d do not match the amalgam formulas");
    Rational hypothesis_lhs = Rational::make(p.d_G, p.n_G);
    Rational hypothesis_rhs = Rational::make(p.s, p.n_H - 1);
    bool hypothesis = hypothesis_rhs.leq(hypothesis_lhs);
    Rational lhs = Rational::make(d, n);
    Rational rhs = Rational::make(p.n_H - 1, p.n_H).times(Rational::make(p.d_G, p.n_G));
    bool conclusion = lhs.leq(rhs);
    r.parameters["hypothesis"] = {{"lhs", {hypothesis_lhs.num, hypothesis_lhs.den}},
                                  {"rhs", {hypothesis_rhs.num, hypothesis_rhs.den}},
                                  {"pass", hypothesis}};
    r.parameters["conclusion"] = {{"lhs", {lhs.num, lhs.den}},
                                  {"rhs", {rhs.num, rhs.den}},
                                  {"pass", conclusion}};
    r.pass = hypothesis && conclusion;
    if (!r.pass)
        r.witness_extra = {{"hypothesis", hypothesis}, {"conclusion", conclusion},
                           {"d_over_n", {lhs.num, lhs.den}},
                           {"bound", {rhs.num, rhs.den}}};
    return r;
}

nlohmann::json Theorem3Plan::to_json() const {
    nlohmann::json j;
    j["s"] = s;
    j["q"] = q;
    j["m"] = m;
    j["steps"] = nlohmann::json::array();
    for (const auto& st : steps)
        j["steps"].push_back({{"i", st.i}, {"n", st.n}, {"d", st.d}, {"t", st.t},
                              {"ratio_num", st.ratio.num}, {"ratio_den", st.ratio.den},
                              {"divisor", st.divisor}, {"verified", st.verified}});
    return j;
}

Theorem3Plan theorem3_plan(int s, int q, const Graph& seed, int iterations, int verify_limit) {
    if (s < 1 || q < 2) throw std::invalid_argument("theorem3_plan: need s >= 1, q >= 2");
    if (iterations < 1) throw std::invalid_argument("theorem3_plan: need at least one iteration");
    const int m = iterations;
    auto seed_summary = degree_summary(seed);
    if (!seed_summary.regular_degree)
        throw std::invalid_argument("theorem3_plan: seed graph must be regular");
    PatternGraph target = clique_pattern(s + 2);
    {
        auto rep = is_saturated(seed, target);
        if (!rep.pass)
            throw std::invalid_argument("theorem3_plan: seed graph is not K_" +
                                        std::to_string(s + 2) + "-saturated");
    }
    auto factors = multipartite_two_factors(q, s);
    {
        auto rep = verify_orientation_property(factors);
        if (!rep.pass)
            throw std::invalid_argument(
                "theorem3_plan: orientation property fails for (q,s); pick a larger q");
    }
    long long blow = 1;
    for (int i = 0; i < m; ++i) blow *= static_cast<long long>(s) * (q - 1);
    Theorem3Plan plan;
    plan.s = s;
    plan.q = q;
    plan.m = m;
    Graph multipartite = complete_multipartite(std::vector<int>(s + 1, q));
    const long long n_H = static_cast<long long>(s + 1) * q;
    const long long d_H = static_cast<long long>(s) * q;
    Graph current = blow_up(seed, empty_graph(static_cast<int>(blow)));
    long long n_i = current.order();
    long long d_i = static_cast<long long>(*seed_summary.regular_degree) * blow;
    {
        PlanStep step;
        step.i = 0;
        step.n = n_i;
        step.d = d_i;
        step.t = 0;
        step.ratio = Rational::make(d_i, n_i);
        step.divisor = blow;
        if (n_i % step.divisor != 0 || d_i % step.divisor != 0)
            throw std::logic_error("theorem3_plan: divisibility invariant fails at step 0");
        if (current.order() <= verify_limit) {
            step.verified = is_saturated(current, target).pass;
            if (!step.verified)
                throw std::logic_error("theorem3_plan: F_0 failed saturation re-verification");
        }
        plan.steps.push_back(step);
        plan.graphs.push_back(current);
    }
    for (int i = 1; i <= m; ++i) {
        auto t_result = solve_t(n_H, d_H, n_i, d_i, s);
        if (!t_result.t)
            throw std::logic_error("theorem3_plan: no integer t at step " + std::to_string(i) +
                                   " (fraction " + std::to_string(t_result.fraction.num) + "/" +
                                   std::to_string(t_result.fraction.den) + ")");
        long long t = *t_result.t;
        current = amalgamate(multipartite, factors, s, static_cast<int>(t), current);
        Rational prev_ratio = Rational::make(d_i, n_i);
        n_i = n_H * (t + n_i);
        d_i = s * t + (n_H - 1) * plan.steps[i - 1].d;
        PlanStep step;
        step.i = i;
        step.n = n_i;
        step.d = d_i;
        step.t = t;
        step.ratio = Rational::make(d_i, n_i);
        long long divisor = 1;
        for (int j = 0; j < m - i; ++j) divisor *= static_cast<long long>(s) * (q - 1);
        step.divisor = divisor;
        if (n_i % divisor != 0 || d_i % divisor != 0)
            throw std::logic_error("theorem3_plan: divisibility invariant fails at step " +
                                   std::to_string(i));
        Rational bound = Rational::make(n_H - 1, n_H).times(prev_ratio);
        if (!step.ratio.leq(bound))
            throw std::logic_error("theorem3_plan: per-step ratio bound fails at step " +
                                   std::to_string(i));
        if (static_cast<long long>(current.order()) != n_i)
            throw std::logic_error("theorem3_plan: vertex count mismatch at step " +
                                   std::to_string(i));
        if (current.order() <= verify_limit) {
            step.verified = is_saturated(current, target).pass;
            if (!step.verified)
                throw std::logic_error("theorem3_plan: F_" + std::to_string(i) +
                                       " failed saturation re-verification");
        }
        plan.steps.push_back(step);
        plan.graphs.push_back(current);
    }
    return plan;
}

}  // namespace regsat

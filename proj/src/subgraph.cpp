#include "regsat/subgraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace regsat {

namespace {

// Ascending-candidate clique backtracker over bit rows. `stack` accumulates
// the embedding; candidate sets live in per-depth scratch rows.
class CliqueSearch {
public:
    CliqueSearch(const Graph& g, int k)
        : g_(g), stride_(g.stride()), scratch_(static_cast<std::size_t>(std::max(k, 1)) * stride_) {}

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
        std::uint64_t* child = scratch_.data() + static_cast<std::size_t>(depth) * stride_;
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
    std::vector<std::uint64_t> scratch_;
};

void verify_clique_embedding(const Graph& g, const std::vector<int>& map,
                             std::optional<std::pair<int, int>> assumed) {
    for (std::size_t i = 0; i < map.size(); ++i)
        for (std::size_t j = i + 1; j < map.size(); ++j) {
            int a = std::min(map[i], map[j]), b = std::max(map[i], map[j]);
            if (assumed && a == std::min(assumed->first, assumed->second) &&
                b == std::max(assumed->first, assumed->second))
                continue;
            if (a == b || !g.has_edge(a, b))
                throw std::logic_error("has_clique produced a non-clique embedding");
        }
}

std::optional<Embedding> clique_search_all(const Graph& g, int k) {
    if (k == 1) {
        if (g.order() == 0) return std::nullopt;
        return Embedding{{0}};
    }
    CliqueSearch search(g, k);
    std::vector<std::uint64_t> top(g.stride());
    for (int u = 0; u + k <= g.order(); ++u) {
        if (!and_rows_above(top.data(), g.row(u), g.row(u), g.stride(), u)) continue;
        search.stack.assign(1, u);
        if (search.extend(top.data(), k - 1, 0)) {
            verify_clique_embedding(g, search.stack, std::nullopt);
            return Embedding{std::move(search.stack)};
        }
    }
    return std::nullopt;
}

// Backtracking matcher for small patterns; pattern vertices assigned in a
// fixed order, candidates filtered through the bit rows of already-placed
// pattern neighbours.
class SubgraphSearch {
public:
    SubgraphSearch(const Graph& host, const Graph& pat)
        : host_(host), pat_(pat), stride_(host.stride()),
          img_(pat.order(), -1), used_((host.order() + 63) / 64, 0),
          scratch_(static_cast<std::size_t>(std::max(pat.order(), 1)) * stride_) {
        host_deg_.resize(host.order());
        for (int v = 0; v < host.order(); ++v) host_deg_[v] = host.degree(v);
        pat_deg_.resize(pat.order());
        for (int p = 0; p < pat.order(); ++p) pat_deg_[p] = pat.degree(p);
    }

    // `pinned` vertices come first in the given order with fixed images.
    std::optional<Embedding> run(const std::vector<std::pair<int, int>>& pinned) {
        if (pat_.order() > host_.order()) return std::nullopt;
        order_.clear();
        std::vector<bool> placed(pat_.order(), false);
        for (auto [p, v] : pinned) {
            if (host_deg_[v] < pat_deg_[p]) return std::nullopt;
            order_.push_back(p);
            placed[p] = true;
            img_[p] = v;
            mark_used(v, true);
        }
        std::vector<int> rest;
        for (int p = 0; p < pat_.order(); ++p)
            if (!placed[p]) rest.push_back(p);
        std::sort(rest.begin(), rest.end(), [&](int a, int b) {
            if (pat_deg_[a] != pat_deg_[b]) return pat_deg_[a] > pat_deg_[b];
            return a < b;
        });
        order_.insert(order_.end(), rest.begin(), rest.end());
        prior_neighbors_.assign(pat_.order(), {});
        for (std::size_t d = 0; d < order_.size(); ++d)
            for (std::size_t e = 0; e < d; ++e)
                if (pat_.has_edge(order_[d], order_[e]))
                    prior_neighbors_[d].push_back(order_[e]);
        bool ok = assign(pinned.size());
        std::optional<Embedding> result;
        if (ok) result = Embedding{img_};
        for (auto [p, v] : pinned) {
            mark_used(v, false);
            img_[p] = -1;
        }
        return result;
    }

private:
    bool assign(std::size_t depth) {
        if (depth == order_.size()) return true;
        int pv = order_[depth];
        const auto& req = prior_neighbors_[depth];
        if (!req.empty()) {
            std::uint64_t* cand = scratch_.data() + depth * stride_;
            and_rows(cand, host_.row(img_[req[0]]), host_.row(img_[req[0]]), stride_);
            for (std::size_t i = 1; i < req.size(); ++i)
                and_rows(cand, cand, host_.row(img_[req[i]]), stride_);
            for (int v = first_bit(cand, stride_); v >= 0; v = next_bit(cand, stride_, v + 1)) {
                if (is_used(v) || host_deg_[v] < pat_deg_[pv]) continue;
                img_[pv] = v;
                mark_used(v, true);
                if (assign(depth + 1)) return true;
                mark_used(v, false);
                img_[pv] = -1;
            }
        } else {
            for (int v = 0; v < host_.order(); ++v) {
                if (is_used(v) || host_deg_[v] < pat_deg_[pv]) continue;
                img_[pv] = v;
                mark_used(v, true);
                if (assign(depth + 1)) return true;
                mark_used(v, false);
                img_[pv] = -1;
            }
        }
        return false;
    }

    bool is_used(int v) const { return (used_[v >> 6] >> (v & 63)) & 1u; }
    void mark_used(int v, bool on) {
        if (on)
            used_[v >> 6] |= std::uint64_t(1) << (v & 63);
        else
            used_[v >> 6] &= ~(std::uint64_t(1) << (v & 63));
    }

    const Graph& host_;
    const Graph& pat_;
    int stride_;
    std::vector<int> img_;
    std::vector<std::uint64_t> used_;
    std::vector<std::uint64_t> scratch_;
    std::vector<int> host_deg_, pat_deg_;
    std::vector<int> order_;
    std::vector<std::vector<int>> prior_neighbors_;
};

void verify_subgraph_embedding(const Graph& g, const Graph& pat, const std::vector<int>& map,
                               std::optional<std::pair<int, int>> assumed) {
    for (int p = 0; p < pat.order(); ++p)
        for (int q = p + 1; q < pat.order(); ++q) {
            if (!pat.has_edge(p, q)) continue;
            int a = std::min(map[p], map[q]), b = std::max(map[p], map[q]);
            if (assumed && a == std::min(assumed->first, assumed->second) &&
                b == std::max(assumed->first, assumed->second))
                continue;
            if (a == b || !g.has_edge(a, b))
                throw std::logic_error("contains_subgraph produced an invalid embedding");
        }
}

std::optional<Embedding> subgraph_search(const Graph& g, const PatternGraph& pattern,
                                         std::optional<std::pair<int, int>> pair,
                                         bool pair_assumed) {
    const Graph& pat = pattern.graph;
    SubgraphSearch search(g, pat);
    if (!pair) {
        auto r = search.run({});
        if (r) verify_subgraph_embedding(g, pat, r->mapping, std::nullopt);
        return r;
    }
    auto [u, v] = *pair;
    for (int p = 0; p < pat.order(); ++p)
        for (int q = p + 1; q < pat.order(); ++q) {
            if (!pat.has_edge(p, q)) continue;
            for (auto [pu, pv] : {std::pair{u, v}, std::pair{v, u}}) {
                auto r = search.run({{p, pu}, {q, pv}});
                if (r) {
                    verify_subgraph_embedding(g, pat, r->mapping,
                                              pair_assumed ? pair : std::nullopt);
                    return r;
                }
            }
        }
    return std::nullopt;
}

}  // namespace

std::optional<Embedding> has_clique(const Graph& g, int k,
                                    std::optional<std::pair<int, int>> through) {
    if (k < 1) throw std::invalid_argument("has_clique: need k >= 1");
    if (!through) return clique_search_all(g, k);
    auto [u, v] = *through;
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.has_edge(u, v))
        throw std::invalid_argument("has_clique: `through` must be an edge of G");
    auto r = detail::clique_with_pair(g, k, u, v);
    if (r) verify_clique_embedding(g, r->mapping, std::nullopt);
    return r;
}

std::optional<Embedding> contains_subgraph(const Graph& g, const PatternGraph& pattern,
                                           std::optional<std::pair<int, int>> through) {
    if (through) {
        auto [u, v] = *through;
        if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.has_edge(u, v))
            throw std::invalid_argument("contains_subgraph: `through` must be an edge of G");
    }
    return subgraph_search(g, pattern, through, /*pair_assumed=*/false);
}

namespace detail {

std::optional<Embedding> clique_with_pair(const Graph& g, int k, int u, int v) {
    if (k < 2) return std::nullopt;  // cannot cover both endpoints
    CliqueSearch search(g, k);
    std::vector<std::uint64_t> cand(g.stride());
    and_rows(cand.data(), g.row(u), g.row(v), g.stride());
    search.stack = {u, v};
    if (!search.extend(cand.data(), k - 2, 0)) return std::nullopt;
    verify_clique_embedding(g, search.stack, std::pair{u, v});
    return Embedding{std::move(search.stack)};
}

std::optional<Embedding> subgraph_with_pair(const Graph& g, const PatternGraph& pattern,
                                            int u, int v) {
    return subgraph_search(g, pattern, std::pair{u, v}, /*pair_assumed=*/true);
}

bool creates_copy_with_pair(const Graph& g, const PatternGraph& pattern, int u, int v) {
    if (pattern.kind == PatternKind::clique)
        return clique_with_pair(g, pattern.params[0], u, v).has_value();
    return subgraph_with_pair(g, pattern, u, v).has_value();
}

}  // namespace detail

}  // namespace regsat

#pragma once

#include <cstdint>
#include <exception>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace regsat {

// Undirected simple graph on vertices 0..n-1, adjacency stored as n rows of
// ceil(n/64) words. Symmetric, zero diagonal. Immutable by convention once a
// builder returns it; concurrent readers are safe.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n)
        : n_(n), stride_((n + 63) / 64),
          bits_(static_cast<std::size_t>(n) * static_cast<std::size_t>(stride_), 0) {}

    int order() const { return n_; }
    int stride() const { return stride_; }

    bool has_edge(int u, int v) const {
        return (row(u)[v >> 6] >> (v & 63)) & 1u;
    }

    // Internal builder primitive: callers guarantee 0 <= u,v < n and u != v.
    void add_edge(int u, int v) {
        word_row(u)[v >> 6] |= std::uint64_t(1) << (v & 63);
        word_row(v)[u >> 6] |= std::uint64_t(1) << (u & 63);
    }

    void remove_edge(int u, int v) {
        word_row(u)[v >> 6] &= ~(std::uint64_t(1) << (v & 63));
        word_row(v)[u >> 6] &= ~(std::uint64_t(1) << (u & 63));
    }

    const std::uint64_t* row(int u) const {
        return bits_.data() + static_cast<std::size_t>(u) * stride_;
    }

    int degree(int u) const;
    long long edge_count() const;
    std::vector<int> neighbors(int u) const;

    bool operator==(const Graph&) const = default;

private:
    std::uint64_t* word_row(int u) {
        return bits_.data() + static_cast<std::size_t>(u) * stride_;
    }

    int n_ = 0;
    int stride_ = 0;
    std::vector<std::uint64_t> bits_;
};

// ---- word-level helpers shared by the search kernels ----

int popcount_words(const std::uint64_t* w, int stride);
// First set bit index, or -1.
int first_bit(const std::uint64_t* w, int stride);
// First set bit with index >= from, or -1.
int next_bit(const std::uint64_t* w, int stride, int from);
void and_rows(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, int stride);
// dst = a & b restricted to indices > limit; returns true if any bit set.
bool and_rows_above(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
                    int stride, int limit);
// True iff (a & b) has a set bit above `limit`.
bool intersects_above(const std::uint64_t* a, const std::uint64_t* b, int stride, int limit);

struct DegreeSummary {
    std::vector<int> degrees;
    std::optional<int> regular_degree;  // present iff min == max
    long long edge_count = 0;
};

Graph build_graph(int n, std::span<const std::pair<int, int>> edges);
Graph build_graph(int n, std::initializer_list<std::pair<int, int>> edges);

DegreeSummary degree_summary(const Graph& g);

struct DistanceMatrix {
    static constexpr int unreachable = -1;
    int n = 0;
    std::vector<int> dist;  // row-major n*n
    int at(int i, int j) const { return dist[static_cast<std::size_t>(i) * n + j]; }
};

// BFS from every vertex; diameter absent when disconnected (or n == 0).
std::pair<DistanceMatrix, std::optional<int>> distance_and_diameter(const Graph& g);

std::vector<std::pair<int, int>> non_edges(const Graph& g);

template <typename F>
void for_each_non_edge(const Graph& g, F&& f) {
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j)
            if (!g.has_edge(i, j)) f(i, j);
}

// Parse failure for graph6 / edge-list input; offset is the byte position.
class parse_error : public std::exception {
public:
    parse_error(std::string message, std::size_t offset);
    const char* what() const noexcept override { return message_.c_str(); }
    std::size_t offset() const { return offset_; }

private:
    std::string message_;
    std::size_t offset_;
};

// graph6, bit-exact: header n+63 for n <= 62, else 126 + three bytes of n in
// big-endian 6-bit groups (+63 each); body packs the upper triangle in column
// order x(0,1), x(0,2), x(1,2), x(0,3), ... six bits per byte, MSB first.
std::string encode_graph6(const Graph& g);
Graph decode_graph6(std::string_view bytes);

// Plain text: header line "n m", then one "u v" line per edge.
std::string encode_edge_list(const Graph& g);
Graph decode_edge_list(std::string_view text);

}  // namespace regsat

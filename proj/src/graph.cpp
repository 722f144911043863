#include "regsat/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace regsat {

int Graph::degree(int u) const { return popcount_words(row(u), stride_); }

long long Graph::edge_count() const {
    long long total = 0;
    for (int u = 0; u < n_; ++u) total += degree(u);
    return total / 2;
}

std::vector<int> Graph::neighbors(int u) const {
    std::vector<int> out;
    const std::uint64_t* r = row(u);
    for (int v = first_bit(r, stride_); v >= 0; v = next_bit(r, stride_, v + 1))
        out.push_back(v);
    return out;
}

int popcount_words(const std::uint64_t* w, int stride) {
    int c = 0;
    for (int i = 0; i < stride; ++i) c += std::popcount(w[i]);
    return c;
}

int first_bit(const std::uint64_t* w, int stride) {
    for (int i = 0; i < stride; ++i)
        if (w[i]) return i * 64 + std::countr_zero(w[i]);
    return -1;
}

int next_bit(const std::uint64_t* w, int stride, int from) {
    if (from < 0) from = 0;
    int word = from >> 6;
    if (word >= stride) return -1;
    std::uint64_t masked = w[word] & (~std::uint64_t(0) << (from & 63));
    if (masked) return word * 64 + std::countr_zero(masked);
    for (int i = word + 1; i < stride; ++i)
        if (w[i]) return i * 64 + std::countr_zero(w[i]);
    return -1;
}

void and_rows(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b, int stride) {
    for (int i = 0; i < stride; ++i) dst[i] = a[i] & b[i];
}

bool and_rows_above(std::uint64_t* dst, const std::uint64_t* a, const std::uint64_t* b,
                    int stride, int limit) {
    int cut = (limit + 1) >> 6;
    std::uint64_t any = 0;
    for (int i = 0; i < cut && i < stride; ++i) dst[i] = 0;
    if (cut < stride) {
        dst[cut] = a[cut] & b[cut] & (~std::uint64_t(0) << ((limit + 1) & 63));
        any = dst[cut];
        for (int i = cut + 1; i < stride; ++i) {
            dst[i] = a[i] & b[i];
            any |= dst[i];
        }
    }
    return any != 0;
}

bool intersects_above(const std::uint64_t* a, const std::uint64_t* b, int stride, int limit) {
    int cut = (limit + 1) >> 6;
    if (cut >= stride) return false;
    if (a[cut] & b[cut] & (~std::uint64_t(0) << ((limit + 1) & 63))) return true;
    for (int i = cut + 1; i < stride; ++i)
        if (a[i] & b[i]) return true;
    return false;
}

Graph build_graph(int n, std::span<const std::pair<int, int>> edges) {
    if (n < 0) throw std::invalid_argument("build_graph: negative vertex count");
    Graph g(n);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("build_graph: endpoint out of range in edge (" +
                                        std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v)
            throw std::invalid_argument("build_graph: loop edge (" + std::to_string(u) + "," +
                                        std::to_string(v) + ")");
        g.add_edge(u, v);
    }
    return g;
}

Graph build_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
    return build_graph(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

DegreeSummary degree_summary(const Graph& g) {
    DegreeSummary s;
    s.degrees.resize(g.order());
    long long total = 0;
    for (int u = 0; u < g.order(); ++u) {
        s.degrees[u] = g.degree(u);
        total += s.degrees[u];
    }
    s.edge_count = total / 2;
    if (g.order() > 0) {
        auto [lo, hi] = std::minmax_element(s.degrees.begin(), s.degrees.end());
        if (*lo == *hi) s.regular_degree = *lo;
    }
    return s;
}

std::pair<DistanceMatrix, std::optional<int>> distance_and_diameter(const Graph& g) {
    const int n = g.order();
    DistanceMatrix m;
    m.n = n;
    m.dist.assign(static_cast<std::size_t>(n) * n, DistanceMatrix::unreachable);
    int diameter = 0;
    bool connected = n > 0;
    std::vector<int> queue;
    for (int src = 0; src < n; ++src) {
        int* d = m.dist.data() + static_cast<std::size_t>(src) * n;
        queue.clear();
        queue.push_back(src);
        d[src] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            const std::uint64_t* r = g.row(u);
            for (int v = first_bit(r, g.stride()); v >= 0; v = next_bit(r, g.stride(), v + 1)) {
                if (d[v] == DistanceMatrix::unreachable) {
                    d[v] = d[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        for (int v = 0; v < n; ++v) {
            if (d[v] == DistanceMatrix::unreachable)
                connected = false;
            else
                diameter = std::max(diameter, d[v]);
        }
    }
    std::optional<int> diam;
    if (connected) diam = diameter;
    return {std::move(m), diam};
}

std::vector<std::pair<int, int>> non_edges(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    for_each_non_edge(g, [&](int i, int j) { out.emplace_back(i, j); });
    return out;
}

parse_error::parse_error(std::string message, std::size_t offset)
    : message_(std::move(message) + " (byte " + std::to_string(offset) + ")"), offset_(offset) {}

namespace {

constexpr int kG6Lo = 63;   // '?'
constexpr int kG6Hi = 126;  // '~'

void append_sextets(std::string& out, const std::vector<bool>& bits) {
    for (std::size_t i = 0; i < bits.size(); i += 6) {
        int v = 0;
        for (std::size_t j = 0; j < 6; ++j) {
            v <<= 1;
            if (i + j < bits.size() && bits[i + j]) v |= 1;
        }
        out.push_back(static_cast<char>(v + kG6Lo));
    }
}

}  // namespace

std::string encode_graph6(const Graph& g) {
    const long long n = g.order();
    if (n > 258047) throw std::invalid_argument("encode_graph6: order exceeds 258047");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kG6Lo));
    } else {
        out.push_back(static_cast<char>(kG6Hi));
        out.push_back(static_cast<char>(((n >> 12) & 63) + kG6Lo));
        out.push_back(static_cast<char>(((n >> 6) & 63) + kG6Lo));
        out.push_back(static_cast<char>((n & 63) + kG6Lo));
    }
    std::vector<bool> bits;
    bits.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j));
    append_sextets(out, bits);
    return out;
}

Graph decode_graph6(std::string_view bytes) {
    std::size_t pos = 0;
    auto take = [&]() -> int {
        if (pos >= bytes.size()) throw parse_error("decode_graph6: truncated input", pos);
        unsigned char c = static_cast<unsigned char>(bytes[pos]);
        if (c < kG6Lo || c > kG6Hi)
            throw parse_error("decode_graph6: byte out of range [63,126]", pos);
        ++pos;
        return c - kG6Lo;
    };
    long long n;
    int head = take();
    if (head < 63) {
        n = head;
    } else {
        n = (static_cast<long long>(take()) << 12);
        n |= take() << 6;
        n |= take();
        if (n > 258047) throw parse_error("decode_graph6: order exceeds 258047", 0);
    }
    Graph g(static_cast<int>(n));
    long long nbits = n * (n - 1) / 2;
    int acc = 0, have = 0;
    long long k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            if (have == 0) {
                acc = take();
                have = 6;
            }
            if (acc & (1 << (have - 1))) g.add_edge(i, j);
            --have;
        }
    }
    (void)nbits;
    if (pos != bytes.size()) throw parse_error("decode_graph6: trailing bytes", pos);
    return g;
}

std::string encode_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j)
            if (g.has_edge(i, j)) out << i << ' ' << j << '\n';
    return out.str();
}

Graph decode_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    long long n = -1, m = -1;
    if (!(in >> n >> m) || n < 0 || m < 0)
        throw parse_error("decode_edge_list: bad header, expected \"n m\"", 0);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    long long u, v;
    while (in >> u >> v) edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    if (static_cast<long long>(edges.size()) != m)
        throw parse_error("decode_edge_list: edge count mismatch with header", 0);
    return build_graph(static_cast<int>(n), edges);
}

}  // namespace regsat

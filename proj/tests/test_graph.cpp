#include <doctest.h>

#include <stdexcept>

#include <random>
#include <set>

#include "regsat/constructions.hpp"
#include "regsat/graph.hpp"
#include "regsat/patterns.hpp"
#include "test_helpers.hpp"

using namespace regsat;
using regsat::testing::check_graph_invariants;
using regsat::testing::floyd_warshall;
using regsat::testing::random_graph;

namespace {

// Reference graph6 encoder built directly from the format description; kept
// separate from the production path on purpose.
std::string reference_graph6(const Graph& g) {
    std::string bits;
    for (int j = 1; j < g.order(); ++j)
        for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j) ? '1' : '0');
    while (bits.size() % 6 != 0) bits.push_back('0');
    std::string out;
    long long n = g.order();
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    for (std::size_t i = 0; i < bits.size(); i += 6) {
        int v = 0;
        for (int k = 0; k < 6; ++k) v = v * 2 + (bits[i + k] - '0');
        out.push_back(static_cast<char>(v + 63));
    }
    return out;
}

}  // namespace

TEST_CASE("build_graph basic shapes") {
    Graph k3 = build_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(k3.edge_count() == 3);
    check_graph_invariants(k3);

    Graph e4 = build_graph(4, {});
    CHECK(e4.edge_count() == 0);
    CHECK(e4.order() == 4);

    Graph c5 = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);

    // duplicates collapse
    Graph dup = build_graph(3, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(dup.edge_count() == 1);
}

TEST_CASE("build_graph rejects bad input") {
    CHECK_THROWS_AS(build_graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(build_graph(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_WITH_AS(build_graph(2, {{0, 5}}),
                         doctest::Contains("(0,5)"), std::invalid_argument);
}

TEST_CASE("degree_summary") {
    auto c5 = cycle_graph(5);
    auto s = degree_summary(c5);
    CHECK(s.regular_degree == 2);
    CHECK(s.edge_count == 5);

    auto star = star_graph(3);
    s = degree_summary(star);
    CHECK_FALSE(s.regular_degree.has_value());
    CHECK(s.degrees == std::vector<int>{3, 1, 1, 1});

    auto k33 = complete_multipartite({3, 3});
    s = degree_summary(k33);
    CHECK(s.regular_degree == 3);
    CHECK(s.edge_count == 9);
}

TEST_CASE("sum of degrees equals twice the edge count") {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 50; ++it) {
        Graph g = random_graph(1 + static_cast<int>(rng() % 14), rng);
        auto s = degree_summary(g);
        long long total = 0;
        for (int d : s.degrees) total += d;
        CHECK(total == 2 * s.edge_count);
    }
}

TEST_CASE("distances and diameter") {
    auto [dp, diam_p] = distance_and_diameter(petersen());
    CHECK(diam_p == 2);

    auto [dc, diam_c] = distance_and_diameter(cycle_graph(6));
    CHECK(diam_c == 3);

    auto [de, diam_e] = distance_and_diameter(empty_graph(4));
    CHECK_FALSE(diam_e.has_value());

    auto [d1, diam_1] = distance_and_diameter(complete_graph(1));
    CHECK(diam_1 == 0);
}

TEST_CASE("BFS distances agree with the Floyd-Warshall oracle") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 40; ++it) {
        Graph g = random_graph(2 + static_cast<int>(rng() % 9), rng, 0.4);
        auto [m, diam] = distance_and_diameter(g);
        auto oracle = floyd_warshall(g);
        int omax = 0;
        bool connected = true;
        for (int i = 0; i < g.order(); ++i)
            for (int j = 0; j < g.order(); ++j) {
                CHECK(m.at(i, j) == oracle[i][j]);
                if (oracle[i][j] < 0)
                    connected = false;
                else
                    omax = std::max(omax, oracle[i][j]);
            }
        if (connected)
            CHECK(diam == omax);
        else
            CHECK_FALSE(diam.has_value());
        // matrix properties
        for (int i = 0; i < g.order(); ++i) {
            CHECK(m.at(i, i) == 0);
            for (int j = 0; j < g.order(); ++j) CHECK(m.at(i, j) == m.at(j, i));
        }
    }
}

TEST_CASE("non_edges") {
    CHECK(non_edges(complete_graph(3)).empty());
    CHECK(non_edges(cycle_graph(5)).size() == 5);
    CHECK(non_edges(empty_graph(3)).size() == 3);
    auto ne = non_edges(cycle_graph(5));
    std::set<std::pair<int, int>> got(ne.begin(), ne.end());
    CHECK(got == std::set<std::pair<int, int>>{{0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}});
}

TEST_CASE("graph6 hand-encoded values") {
    CHECK(encode_graph6(complete_graph(3)) == "Bw");
    Graph e3 = decode_graph6("B?");
    CHECK(e3.order() == 3);
    CHECK(e3.edge_count() == 0);
    CHECK(encode_graph6(Graph(0)) == "?");
    CHECK(decode_graph6("?").order() == 0);
}

TEST_CASE("graph6 round trip and reference encoder agreement") {
    std::mt19937_64 rng(13);
    for (int it = 0; it < 1000; ++it) {
        int n = static_cast<int>(rng() % 41);
        Graph g = random_graph(n, rng);
        std::string enc = encode_graph6(g);
        CHECK(enc == reference_graph6(g));
        CHECK(decode_graph6(enc) == g);
    }
}

TEST_CASE("graph6 extended header") {
    Graph g(63);
    g.add_edge(0, 62);
    g.add_edge(13, 40);
    std::string enc = encode_graph6(g);
    CHECK(static_cast<unsigned char>(enc[0]) == 126);
    CHECK(enc == reference_graph6(g));
    CHECK(decode_graph6(enc) == g);
}

TEST_CASE("graph6 parse errors carry the byte offset") {
    // byte 32 (' ') is outside [63,126]
    try {
        decode_graph6("B \x20");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.offset() == 1);
    }
    CHECK_THROWS_AS(decode_graph6("B"), parse_error);      // truncated body
    CHECK_THROWS_AS(decode_graph6("Bww"), parse_error);    // trailing bytes
    CHECK_THROWS_AS(decode_graph6(""), parse_error);       // empty
}

TEST_CASE("edge list round trip") {
    auto g = cycle_graph(7);
    std::string text = encode_edge_list(g);
    CHECK(decode_edge_list(text) == g);
    CHECK(text.substr(0, 3) == "7 7");
    CHECK_THROWS_AS(decode_edge_list("3 2\n0 1\n"), parse_error);  // count mismatch
    CHECK_THROWS_AS(decode_edge_list("garbage"), parse_error);
}

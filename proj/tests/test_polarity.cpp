#include <doctest.h>

#include <stdexcept>

#include <bit>
#include <cmath>
#include <random>
#include <set>

#include "regsat/checkers.hpp"
#include "regsat/constructions.hpp"
#include "regsat/patterns.hpp"
#include "regsat/polarity.hpp"

using namespace regsat;

namespace {

// Oracle: remainder of carry-less division, for irreducibility checks and as
// an independent multiplication route.
std::uint64_t poly_mod(std::uint64_t a, std::uint64_t b) {
    int db = 63 - std::countl_zero(b);
    while (a >= (std::uint64_t(1) << db)) {
        int da = 63 - std::countl_zero(a);
        if (da < db) break;
        a ^= b << (da - db);
    }
    return a;
}

std::uint64_t clmul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t acc = 0;
    while (b) {
        if (b & 1) acc ^= a;
        a <<= 1;
        b >>= 1;
    }
    return acc;
}

}  // namespace

TEST_CASE("modulus table entries are irreducible (trial division oracle)") {
    for (int p = 1; p <= 16; ++p) {
        std::uint64_t f = GF2m::modulus_for(p);
        CHECK((63 - std::countl_zero(f)) == p);  // degree p
        bool irreducible = true;
        for (std::uint64_t g = 2; g < (std::uint64_t(1) << (p / 2 + 1)); ++g) {
            if (g < 2 || (63 - std::countl_zero(g)) < 1) continue;
            if (poly_mod(f, g) == 0) {
                irreducible = false;
                break;
            }
        }
        CHECK(irreducible);
    }
    CHECK_THROWS_AS(GF2m(0), std::invalid_argument);
    CHECK_THROWS_AS(GF2m(17), std::invalid_argument);
}

TEST_CASE("GF(4) multiplication against the long-division oracle") {
    GF2m f(2);
    CHECK(f.mul(2, 2) == 3);  // x*x = x+1 under x^2+x+1
    for (std::uint32_t a = 0; a < 4; ++a)
        for (std::uint32_t b = 0; b < 4; ++b)
            CHECK(f.mul(a, b) == poly_mod(clmul(a, b), f.modulus()));
}

TEST_CASE("mul matches the oracle for random inputs across p") {
    std::mt19937_64 rng(17);
    for (int p = 1; p <= 16; ++p) {
        GF2m f(p);
        for (int it = 0; it < 200; ++it) {
            std::uint32_t a = static_cast<std::uint32_t>(rng()) & (f.order() - 1);
            std::uint32_t b = static_cast<std::uint32_t>(rng()) & (f.order() - 1);
            CHECK(f.mul(a, b) == poly_mod(clmul(a, b), f.modulus()));
        }
    }
}

TEST_CASE("field axioms, exhaustive for small p") {
    for (int p = 1; p <= 4; ++p) {
        GF2m f(p);
        const std::uint32_t q = f.order();
        for (std::uint32_t a = 0; a < q; ++a) {
            CHECK(f.add(a, a) == 0);  // characteristic 2
            CHECK(f.mul(a, 1) == a);
            for (std::uint32_t b = 0; b < q; ++b) {
                CHECK(f.mul(a, b) == f.mul(b, a));
                for (std::uint32_t c = 0; c < q; ++c) {
                    CHECK(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }
}

TEST_CASE("inverses, exhaustive up to p=8") {
    for (int p = 1; p <= 8; ++p) {
        GF2m f(p);
        for (std::uint32_t a = 1; a < f.order(); ++a) CHECK(f.mul(a, f.inv(a)) == 1);
        CHECK_THROWS_AS(f.inv(0), std::invalid_argument);
    }
}

TEST_CASE("polarity graph p=2") {
    auto pg = polarity_graph(2);
    CHECK(pg.graph.order() == 21);
    auto s = degree_summary(pg.graph);
    int deg4 = 0, deg5 = 0;
    for (int d : s.degrees) {
        if (d == 4) ++deg4;
        if (d == 5) ++deg5;
    }
    CHECK(deg4 == 5);
    CHECK(deg5 == 16);
    CHECK(pg.absolute.size() == 5);
    // absolute points match S = {(e,x,e+x)} u {(0,e,e)} by direct dot test
    GF2m f(2);
    std::set<ProjectivePoint> absolute_points;
    for (int idx : pg.absolute) absolute_points.insert(pg.points[idx]);
    std::set<ProjectivePoint> expected;
    for (std::uint32_t x = 0; x < 4; ++x) expected.insert({1, x, f.add(1, x)});
    expected.insert({0, 1, 1});
    CHECK(absolute_points == expected);
    // S is the neighborhood of (e,e,e)
    std::set<int> nbrs;
    for (int v : pg.graph.neighbors(pg.unit_point)) nbrs.insert(v);
    CHECK(nbrs == std::set<int>(pg.absolute.begin(), pg.absolute.end()));
}

TEST_CASE("polarity graph p=3 degree split") {
    auto pg = polarity_graph(3);
    CHECK(pg.graph.order() == 73);
    auto s = degree_summary(pg.graph);
    int deg8 = 0, deg9 = 0;
    for (int d : s.degrees) {
        if (d == 8) ++deg8;
        if (d == 9) ++deg9;
    }
    CHECK(deg8 == 9);
    CHECK(deg9 == 64);
    CHECK(pg.absolute.size() == 9);
}

TEST_CASE("absolute set is S for p in {2,3,4}") {
    for (int p : {2, 3, 4}) {
        auto pg = polarity_graph(p);
        GF2m f(p);
        std::set<ProjectivePoint> absolute_points;
        for (int idx : pg.absolute) absolute_points.insert(pg.points[idx]);
        std::set<ProjectivePoint> expected;
        for (std::uint32_t x = 0; x < f.order(); ++x) expected.insert({1, x, f.add(1, x)});
        expected.insert({0, 1, 1});
        CHECK(absolute_points == expected);
    }
}

TEST_CASE("twin augmentation") {
    for (int p = 1; p <= 5; ++p) {
        auto tp = twin_augmented_polarity(p);
        long long q = 1LL << p;
        CHECK(tp.graph.order() == q * q + q + 2);
        CHECK(degree_summary(tp.graph).regular_degree == q + 1);
    }
    auto tp2 = twin_augmented_polarity(2);
    CHECK(is_oversaturated(tp2.graph, clique_pattern(3)).pass);
    CHECK(tp2.labels.size() == 22);
    CHECK(tp2.labels.back() == "21 twin");

    auto tp3 = twin_augmented_polarity(3);
    CHECK(tp3.graph.order() == 74);
    CHECK(degree_summary(tp3.graph).regular_degree == 9);
    CHECK(distance_and_diameter(tp3.graph).second == 2);
}

TEST_CASE("twin is not adjacent to the unit point but shares its neighborhood") {
    auto pg = polarity_graph(2);
    auto tp = twin_augmented_polarity(2);
    CHECK_FALSE(tp.graph.has_edge(tp.twin, pg.unit_point));
    for (int v = 0; v < pg.graph.order(); ++v)
        CHECK(tp.graph.has_edge(tp.twin, v) == pg.graph.has_edge(pg.unit_point, v));
}

TEST_CASE("edge density ratio decreases toward 1/2") {
    double prev = 1.0;
    double expected[] = {0.533, 0.523, 0.514};
    int i = 0;
    for (int p : {2, 3, 4}) {
        auto tp = twin_augmented_polarity(p);
        double n = tp.graph.order();
        double ratio = static_cast<double>(tp.graph.edge_count()) / std::pow(n, 1.5);
        CHECK(ratio == doctest::Approx(expected[i]).epsilon(0.002));
        CHECK(ratio < prev);
        CHECK(ratio > 0.5);
        prev = ratio;
        ++i;
    }
}

TEST_CASE("oversaturated family") {
    Graph g22 = oversaturated_family(2, 2);
    CHECK(g22.order() == 44);
    CHECK(degree_summary(g22).regular_degree == 11);  // t(2^p+1) + t-1
    CHECK(is_oversaturated(g22, clique_pattern(4)).pass);

    CHECK(oversaturated_family(3, 1) == twin_augmented_polarity(3).graph);

    Graph g32 = oversaturated_family(3, 2);
    CHECK(g32.order() == 148);
    CHECK(degree_summary(g32).regular_degree == 19);
    // d(d-1) >= t(n-d-1): 342 >= 2*128
    CHECK(check_inequalities(148, 19, std::nullopt, std::nullopt, 2).pass);
}

TEST_CASE("field axioms, random samples for p in 5..8") {
    std::mt19937_64 rng(23);
    for (int p = 5; p <= 8; ++p) {
        GF2m f(p);
        const std::uint32_t mask = f.order() - 1;
        for (int it = 0; it < 500; ++it) {
            std::uint32_t a = static_cast<std::uint32_t>(rng()) & mask;
            std::uint32_t b = static_cast<std::uint32_t>(rng()) & mask;
            std::uint32_t c = static_cast<std::uint32_t>(rng()) & mask;
            CHECK(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
            CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
            CHECK(f.mul(a, b) == f.mul(b, a));
            CHECK(f.add(a, a) == 0);
        }
    }
}

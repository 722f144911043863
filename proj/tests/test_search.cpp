#include <doctest.h>

#include <stdexcept>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "regsat/checkers.hpp"
#include "regsat/constructions.hpp"
#include "regsat/patterns.hpp"
#include "regsat/search.hpp"

using namespace regsat;

namespace {

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) {
        path = (std::filesystem::temp_directory_path() / name).string();
        std::remove(path.c_str());
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("enumeration parity and counts") {
    EnumerationStats stats;
    int emitted = 0;
    enumerate_regular(7, 3, [&](const Graph&) { ++emitted; return true; }, &stats);
    CHECK(emitted == 0);  // odd n*d
    CHECK(stats.labeled == 0);

    // labeled 2-regular graphs on 6 vertices: 60 hexagons + 10 triangle pairs
    enumerate_regular(6, 2, [&](const Graph&) { return true; }, &stats);
    CHECK(stats.labeled == 70);
    CHECK(stats.emitted == 2);  // C6 and 2C3

    enumerate_regular(5, 2, [&](const Graph&) { return true; }, &stats);
    CHECK(stats.labeled == 12);  // 4!/2
    CHECK(stats.emitted == 1);   // C5 only

    // labeled cubic graphs on 6 vertices (complement pairs of the above)
    enumerate_regular(6, 3, [&](const Graph&) { return true; }, &stats);
    CHECK(stats.labeled == 70);
    CHECK(stats.emitted == 2);  // K_{3,3} and the prism
}

TEST_CASE("every emitted graph is d-regular and classes are non-isomorphic") {
    EnumerationStats stats;
    std::vector<Graph> reps;
    enumerate_regular(8, 3, [&](const Graph& g) {
        auto s = degree_summary(g);
        CHECK(s.regular_degree == 3);
        reps.push_back(g);
        return true;
    }, &stats);
    CHECK(stats.labeled == 19355);  // labeled cubic graphs on 8 vertices
    CHECK(reps.size() == 6);        // isomorphism classes, K4+K4 included
}

TEST_CASE("find_regular_saturated on small orders") {
    auto k3 = clique_pattern(3);

    auto r7 = find_regular_saturated(7, k3);
    CHECK_FALSE(r7.rsat_value.has_value());
    for (const auto& o : r7.outcomes) CHECK_FALSE(o.exists);
    CHECK(r7.exhaustive);
    // feasible degrees only: n*d even
    for (const auto& o : r7.outcomes) CHECK((7 * o.d) % 2 == 0);

    auto r6 = find_regular_saturated(6, k3);
    REQUIRE(r6.rsat_value.has_value());
    CHECK(*r6.rsat_value == 9);  // K_{3,3}
    bool d3 = false;
    for (const auto& o : r6.outcomes)
        if (o.d == 3) {
            d3 = o.exists;
            REQUIRE(o.witness_g6.has_value());
            Graph w = decode_graph6(*o.witness_g6);
            CHECK(degree_summary(w).regular_degree == 3);
            CHECK(is_saturated(w, k3).pass);
        }
    CHECK(d3);

    auto rm = find_regular_saturated(5, matching_pattern(2));
    for (const auto& o : rm.outcomes) CHECK_FALSE(o.exists);
}

TEST_CASE("even-n K3 existence at d = n/2 or better") {
    auto k3 = clique_pattern(3);
    for (int n : {4, 6, 8}) {
        auto r = find_regular_saturated(n, k3);
        bool at_half = false;
        for (const auto& o : r.outcomes)
            if (o.d == n / 2 && o.exists) at_half = true;
        bool beaten = r.rsat_value && *r.rsat_value <= static_cast<long long>(n) * (n / 2) / 2;
        CHECK((at_half || beaten));
    }
}

TEST_CASE("star sanity: no regular S4-saturated graph on 7 vertices") {
    auto r = find_regular_saturated(7, star_pattern(4));
    for (const auto& o : r.outcomes) CHECK_FALSE(o.exists);
}

TEST_CASE("rsat table persistence and idempotence") {
    auto k3 = clique_pattern(3);
    TempFile store("regsat_test_store.jsonl");

    auto first = rsat_table(3, 8, k3, store.path);
    CHECK(first.size() == 6);
    bool n7_nonexistent = true;
    for (const auto& r : first)
        if (r.n == 7)
            for (const auto& o : r.outcomes)
                if (o.exists) n7_nonexistent = false;
    CHECK(n7_nonexistent);

    std::uintmax_t size_after_first = std::filesystem::file_size(store.path);
    auto second = rsat_table(3, 8, k3, store.path);
    CHECK(second.size() == 6);
    CHECK(std::filesystem::file_size(store.path) == size_after_first);  // idempotent
    for (std::size_t i = 0; i < first.size(); ++i) {
        CHECK(second[i].n == first[i].n);
        CHECK(second[i].rsat_value == first[i].rsat_value);
    }
}

TEST_CASE("corrupted store witnesses are a hard error naming the record") {
    auto k3 = clique_pattern(3);
    TempFile store("regsat_corrupt_store.jsonl");
    rsat_table(6, 6, k3, store.path);
    // tamper: swap the d=3 witness for a non-saturated graph
    std::ifstream in(store.path);
    std::string line;
    std::getline(in, line);
    in.close();
    auto j = nlohmann::json::parse(line);
    for (auto& o : j["outcomes"])
        if (o["exists"] == true) o["witness"] = encode_graph6(cycle_graph(6));
    std::ofstream out(store.path, std::ios::trunc);
    out << j.dump() << '\n';
    out.close();
    CHECK_THROWS_WITH_AS(load_store(store.path, k3), doctest::Contains("n=6"),
                         std::runtime_error);
}

TEST_CASE("matching M2 nonexistence for n in 5..8") {
    auto m2 = matching_pattern(2);
    for (int n = 5; n <= 8; ++n) {
        auto r = find_regular_saturated(n, m2);
        for (const auto& o : r.outcomes) CHECK_FALSE(o.exists);
    }
}

TEST_CASE("search beyond the exhaustive limit needs sampling") {
    CHECK_THROWS_AS(find_regular_saturated(13, clique_pattern(3)), std::invalid_argument);
    SearchOptions opt;
    opt.samples = 3;
    opt.seed = 5;
    auto r = find_regular_saturated(13, clique_pattern(3), opt);
    CHECK_FALSE(r.exhaustive);
}

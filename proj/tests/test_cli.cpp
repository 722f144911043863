#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <stdexcept>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "regsat/constructions.hpp"
#include "regsat/graph.hpp"

using nlohmann::json;
using namespace regsat;

namespace {

std::string g_cli;  // set from argv[1] in main below

struct Run {
    int exit_code = -1;
    std::string stdout_text;
};

Run run_cli(const std::string& args) {
    std::string out_file =
        (std::filesystem::temp_directory_path() / "regsat_cli_out.txt").string();
    std::string cmd = g_cli + " " + args + " > " + out_file + " 2>/dev/null";
    int rc = std::system(cmd.c_str());
    Run r;
    r.exit_code = WEXITSTATUS(rc);
    std::ifstream in(out_file);
    std::ostringstream ss;
    ss << in.rdbuf();
    r.stdout_text = ss.str();
    return r;
}

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("gen circulant-k3 writes graph and metadata") {
    auto g6 = temp_path("cli_c35.g6");
    auto r = run_cli("gen circulant-k3 --n 35 --out " + g6.string());
    REQUIRE(r.exit_code == 0);
    auto meta = json::parse(slurp(g6.string() + ".json"));
    CHECK(meta["n"] == 35);
    CHECK(meta["d"] == 10);
    CHECK(meta["params"]["A"] == json::array({1, 3, 5, 12, 14}));
    Graph g = decode_graph6(slurp(g6).substr(0, slurp(g6).size() - 1));
    CHECK(g.order() == 35);
    std::filesystem::remove(g6);
    std::filesystem::remove(g6.string() + ".json");
}

TEST_CASE("gen join and end-to-end check") {
    auto g6 = temp_path("cli_join.g6");
    auto r = run_cli("gen join --left C5 --right E3 --out " + g6.string());
    REQUIRE(r.exit_code == 0);
    auto meta = json::parse(r.stdout_text);
    CHECK(meta["n"] == 8);
    CHECK(meta["d"] == 5);
    CHECK(meta["params"]["claim12_degree"] == 5);

    auto chk = run_cli("check --in " + g6.string() + " --pattern K4 --property saturated");
    CHECK(chk.exit_code == 0);
    auto rep = json::parse(chk.stdout_text);
    CHECK(rep["pass"] == true);
    CHECK(rep["property"] == "saturated");
    std::filesystem::remove(g6);
    std::filesystem::remove(g6.string() + ".json");
}

TEST_CASE("check property failure exits 1 with a witness") {
    auto g6 = temp_path("cli_c7.g6");
    {
        std::ofstream out(g6);
        out << encode_graph6(cycle_graph(7)) << "\n";
    }
    auto r = run_cli("check --in " + g6.string() + " --pattern K3 --property saturated");
    CHECK(r.exit_code == 1);
    auto rep = json::parse(r.stdout_text);
    CHECK(rep["pass"] == false);
    CHECK(rep["witness"]["kind"] == "non_edge");
    CHECK(rep["witness"]["pair"] == json::array({0, 3}));
    std::filesystem::remove(g6);
}

TEST_CASE("polarity-twin gen with labels, oversaturated check") {
    auto g6 = temp_path("cli_twin.g6");
    auto labels = temp_path("cli_twin_labels.txt");
    auto r = run_cli("gen polarity-twin --p 2 --out " + g6.string() + " --labels " +
                     labels.string());
    REQUIRE(r.exit_code == 0);
    auto meta = json::parse(r.stdout_text);
    CHECK(meta["n"] == 22);
    CHECK(meta["d"] == 5);
    CHECK(meta["label_map"] == labels.string());
    std::string lbl = slurp(labels);
    CHECK(lbl.find("twin") != std::string::npos);

    auto chk = run_cli("check --in " + g6.string() + " --pattern K3 --property oversaturated");
    CHECK(chk.exit_code == 0);
    std::filesystem::remove(g6);
    std::filesystem::remove(g6.string() + ".json");
    std::filesystem::remove(labels);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run_cli("gen nosuch --out /tmp/x.g6").exit_code == 2);
    CHECK(run_cli("check --in /nonexistent.g6 --pattern K3 --property saturated").exit_code == 2);
    CHECK(run_cli("check --in /tmp --pattern K3 --property nosuch").exit_code == 2);
    CHECK(run_cli("nosuchcommand").exit_code == 2);
    auto g6 = temp_path("cli_bad.g6");
    {
        std::ofstream out(g6);
        out << "B";  // truncated graph6 body
    }
    CHECK(run_cli("check --in " + g6.string() + " --pattern K3 --property free").exit_code == 2);
    std::filesystem::remove(g6);
}

TEST_CASE("search writes the store and table renders it") {
    auto store = temp_path("cli_store.jsonl");
    std::filesystem::remove(store);
    auto r = run_cli("search --n 7 --pattern K3 --store " + store.string());
    REQUIRE(r.exit_code == 0);
    auto res = json::parse(r.stdout_text);
    CHECK(res["rsat"].is_null());

    auto t = run_cli("table --store " + store.string());
    CHECK(t.exit_code == 0);
    CHECK(t.stdout_text.find("K3") != std::string::npos);
    CHECK(t.stdout_text.find("none") != std::string::npos);
    std::filesystem::remove(store);
}

TEST_CASE("plan emits the schedule and the graphs") {
    auto out = temp_path("cli_plan.json");
    auto prefix = temp_path("cli_plan_").string();
    auto r = run_cli("plan --s 1 --q 4 --seed C5 --m 1 --out " + out.string() +
                     " --graph-prefix " + prefix);
    REQUIRE(r.exit_code == 0);
    auto plan = json::parse(slurp(out));
    CHECK(plan["steps"][1]["t"] == 9);
    CHECK(plan["steps"][1]["n"] == 192);
    CHECK(plan["steps"][1]["d"] == 51);
    Graph f1 = decode_graph6(slurp(prefix + "F1.g6").substr(0, slurp(prefix + "F1.g6").size() - 1));
    CHECK(f1.order() == 192);
    std::filesystem::remove(out);
    std::filesystem::remove(prefix + "F0.g6");
    std::filesystem::remove(prefix + "F1.g6");
}

TEST_CASE("bounds evaluates the inequalities") {
    auto r = run_cli("bounds --pattern K4 --n 33 --d 8 --t 2");
    REQUIRE(r.exit_code == 0);
    auto out = json::parse(r.stdout_text);
    CHECK(out["bounds"]["m"] == 2);
    CHECK(out["bounds"]["r"] == 2);
    CHECK(out["inequalities"]["pass"] == true);

    auto fail = run_cli("bounds --pattern K3 --n 100 --d 3");
    CHECK(fail.exit_code == 1);  // 96 <= 9 fails
}

TEST_CASE("gen output is byte-identical across runs") {
    auto a = temp_path("cli_rep_a.g6");
    auto b = temp_path("cli_rep_b.g6");
    REQUIRE(run_cli("gen expr --spec '(C5+E3)[E10]' --out " + a.string()).exit_code == 0);
    REQUIRE(run_cli("gen expr --spec '(C5+E3)[E10]' --out " + b.string()).exit_code == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(json::parse(slurp(a.string() + ".json"))["d"] == 50);
    for (auto p : {a, b}) {
        std::filesystem::remove(p);
        std::filesystem::remove(p.string() + ".json");
    }
}


TEST_CASE("pattern files and edge-list format work through the CLI") {
    auto pat = temp_path("cli_pattern.txt");
    {
        std::ofstream out(pat);
        out << "mytriangle\n3 3\n0 1\n1 2\n0 2\n";
    }
    auto g6 = temp_path("cli_c5.el");
    REQUIRE(run_cli("gen expr --spec C5 --out " + g6.string() + " --format edgelist").exit_code ==
            0);
    CHECK(slurp(g6).substr(0, 3) == "5 5");
    auto r = run_cli("check --in " + g6.string() + " --format edgelist --pattern " +
                     pat.string() + " --property saturated");
    CHECK(r.exit_code == 0);  // C5 is triangle-saturated
    auto rep = json::parse(r.stdout_text);
    CHECK(rep["parameters"]["pattern"] == "mytriangle");
    std::filesystem::remove(pat);
    std::filesystem::remove(g6);
    std::filesystem::remove(g6.string() + ".json");
}

int main(int argc, char** argv) {
    if (argc > 1 && argv[1][0] != '-') g_cli = argv[1];
    if (g_cli.empty()) {
        std::fprintf(stderr, "usage: test_cli <path-to-regsat-cli>\n");
        return 1;
    }
    doctest::Context ctx;
    ctx.applyCommandLine(1, argv);
    return ctx.run();
}

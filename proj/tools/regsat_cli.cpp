#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "regsat/amalgam.hpp"
#include "regsat/checkers.hpp"
#include "regsat/constructions.hpp"
#include "regsat/graph.hpp"
#include "regsat/patterns.hpp"
#include "regsat/polarity.hpp"
#include "regsat/search.hpp"

using nlohmann::json;
using namespace regsat;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitPropertyFail = 1;
constexpr int kExitUsage = 2;

void write_atomic(const std::string& path, const std::string& content) {
    std::filesystem::path target(path);
    std::filesystem::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        out << content;
    }
    std::filesystem::rename(tmp, target);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string trim(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    std::size_t i = 0;
    while (i < s.size() && s[i] == ' ') ++i;
    return s.substr(i);
}

Graph read_graph(const std::string& path, const std::string& format) {
    std::string text = read_file(path);
    bool edgelist = format == "edgelist";
    if (format == "auto") {
        std::string head = text.substr(0, text.find('\n'));
        edgelist = head.find(' ') != std::string::npos;
    }
    if (edgelist) return decode_edge_list(text);
    return decode_graph6(trim(text));
}

void write_graph(const std::string& path, const Graph& g, const std::string& format) {
    if (format == "edgelist")
        write_atomic(path, encode_edge_list(g));
    else
        write_atomic(path, encode_graph6(g) + "\n");
}

PatternGraph resolve_pattern(const std::string& key) {
    if (key.find('/') != std::string::npos || key.find(".txt") != std::string::npos)
        return load_pattern_file(read_file(key));
    return pattern_from_key(key);
}

json degree_field(const Graph& g) {
    auto s = degree_summary(g);
    if (s.regular_degree) return *s.regular_degree;
    return s.degrees;
}

struct GenOutput {
    Graph graph;
    json params;
    std::vector<std::string> labels;
};

GenOutput run_construction(const std::string& name, const json& a) {
    GenOutput out;
    auto circulant_labels = [](int n) {
        std::vector<std::string> labels;
        for (int i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
        return labels;
    };
    if (name == "circulant-k3") {
        auto spec = k3_connection_set(a.at("n").get<int>());
        out.graph = circulant(spec);
        out.params = {{"n", spec.n}, {"A", spec.connection}};
        out.labels = circulant_labels(spec.n);
    } else if (name == "circulant-k4") {
        auto spec = k4_connection_set(a.at("n").get<int>());
        out.graph = circulant(spec);
        out.params = {{"n", spec.n}, {"A", spec.connection}};
        out.labels = circulant_labels(spec.n);
    } else if (name == "circulant") {
        CirculantSpec spec;
        spec.n = a.at("n").get<int>();
        for (const auto& x : a.at("set")) spec.connection.insert(x.get<int>());
        out.graph = circulant(spec);
        out.params = {{"n", spec.n}, {"A", spec.connection}};
        out.labels = circulant_labels(spec.n);
    } else if (name == "expr") {
        out.graph = graph_from_expression(a.at("spec").get<std::string>());
        out.params = {{"spec", a.at("spec")}};
    } else if (name == "join") {
        Graph l = graph_from_expression(a.at("left").get<std::string>());
        Graph r = graph_from_expression(a.at("right").get<std::string>());
        out.graph = join(l, r);
        out.params = {{"left", a.at("left")}, {"right", a.at("right")}};
        if (auto d = join_regular_degree(l, r)) out.params["claim12_degree"] = *d;
        for (int i = 0; i < l.order(); ++i) out.labels.push_back("L" + std::to_string(i));
        for (int i = 0; i < r.order(); ++i) out.labels.push_back("R" + std::to_string(i));
    } else if (name == "blowup") {
        Graph base = graph_from_expression(a.at("g").get<std::string>());
        Graph blob = graph_from_expression(a.at("blob").get<std::string>());
        out.graph = blow_up(base, blob);
        out.params = {{"g", a.at("g")}, {"blob", a.at("blob")}};
        for (int u = 0; u < base.order(); ++u)
            for (int i = 0; i < blob.order(); ++i)
                out.labels.push_back("(" + std::to_string(u) + "," + std::to_string(i) + ")");
    } else if (name == "regreg") {
        auto w = regreg_witness(a.at("t").get<int>(), a.at("d").get<int>());
        out.graph = w.graph;
        out.labels = w.labels;
        out.params = {{"t", a.at("t")},
                      {"d", a.at("d")},
                      {"special_vertex", w.special_vertex},
                      {"constructed_vertex_count", w.constructed_vertex_count},
                      {"stated_vertex_count", w.stated_vertex_count}};
    } else if (name == "polarity") {
        auto pg = polarity_graph(a.at("p").get<int>());
        out.graph = pg.graph;
        out.labels = pg.labels();
        out.params = {{"p", a.at("p")}, {"absolute_points", pg.absolute.size()}};
    } else if (name == "polarity-twin") {
        auto tp = twin_augmented_polarity(a.at("p").get<int>());
        out.graph = tp.graph;
        out.labels = tp.labels;
        out.params = {{"p", a.at("p")}, {"twin", tp.twin}};
    } else if (name == "oversat") {
        out.graph = oversaturated_family(a.at("p").get<int>(), a.at("t").get<int>());
        out.params = {{"p", a.at("p")}, {"t", a.at("t")}};
    } else if (name == "amalgam") {
        int s = a.at("s").get<int>(), q = a.at("q").get<int>();
        Graph g = graph_from_expression(a.at("g").get<std::string>());
        auto gs = degree_summary(g);
        if (!gs.regular_degree) throw std::runtime_error("amalgam: G must be regular");
        Graph h = complete_multipartite(std::vector<int>(s + 1, q));
        long long t;
        if (a.contains("t") && a.at("t").get<long long>() > 0) {
            t = a.at("t").get<long long>();
        } else {
            auto solved = solve_t(static_cast<long long>(s + 1) * q, static_cast<long long>(s) * q,
                                  g.order(), *gs.regular_degree, s);
            if (!solved.t)
                throw std::runtime_error("amalgam: no integer t (fraction " +
                                         std::to_string(solved.fraction.num) + "/" +
                                         std::to_string(solved.fraction.den) + ")");
            t = *solved.t;
        }
        auto factors = multipartite_two_factors(q, s);
        out.graph = amalgamate(h, factors, s, static_cast<int>(t), g);
        out.labels = amalgam_labels(h.order(), static_cast<int>(t), g.order());
        out.params = {{"s", s}, {"q", q}, {"t", t}, {"g", a.at("g")}};
    } else if (name == "matching-sat") {
        int k = a.at("k").get<int>(), n = a.at("n").get<int>();
        if (k < 2 || n < k + 1) throw std::runtime_error("matching-sat: need k >= 2, n > k");
        out.graph = join(complete_graph(k - 1), empty_graph(n - k + 1));
        out.params = {{"k", k}, {"n", n}};
    } else {
        throw CLI::ValidationError(
            "gen", "unknown construction '" + name +
                       "'; registry: circulant-k3 circulant-k4 circulant expr join blowup "
                       "regreg polarity polarity-twin oversat amalgam matching-sat");
    }
    return out;
}

int do_check(const Graph& g, const std::string& pattern_key, const std::string& property,
             const CheckOptions& opt) {
    VerificationReport rep;
    if (property == "regular") {
        rep = is_regular(g);
    } else {
        PatternGraph f = resolve_pattern(pattern_key);
        if (property == "free")
            rep = is_free(g, f, opt);
        else if (property == "saturated")
            rep = is_saturated(g, f, opt);
        else if (property == "oversaturated")
            rep = is_oversaturated(g, f, opt);
        else if (property == "rrsat")
            rep = rrsat_witness(g, f, opt);
        else
            throw CLI::ValidationError("check", "unknown property " + property);
    }
    std::cout << rep.to_json().dump(2) << std::endl;
    return rep.pass ? kExitPass : kExitPropertyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"construction and verification toolkit for regular graph saturation"};
    app.require_subcommand(1);

    // ---- gen ----
    auto* gen = app.add_subcommand("gen", "build a named construction and write it to a file");
    std::string gen_name, gen_out, gen_format = "graph6", gen_labels, gen_set, gen_spec;
    std::string gen_left, gen_right, gen_g, gen_h;
    int gen_n = 0, gen_t = 0, gen_d = 0, gen_p = 0, gen_s = 0, gen_q = 0, gen_k = 0;
    gen->add_option("name", gen_name, "construction name")->required();
    gen->add_option("--out", gen_out, "output graph file")->required();
    gen->add_option("--format", gen_format, "graph6|edgelist")
        ->check(CLI::IsMember({"graph6", "edgelist"}));
    gen->add_option("--labels", gen_labels, "write the label map here");
    gen->add_option("--n", gen_n, "order");
    gen->add_option("--set", gen_set, "comma-separated connection set");
    gen->add_option("--spec", gen_spec, "graph expression, e.g. (C5+E3)[E10]");
    gen->add_option("--left", gen_left, "join left operand");
    gen->add_option("--right", gen_right, "join right operand");
    gen->add_option("--g", gen_g, "blow-up/amalgam base graph expression");
    gen->add_option("--blob", gen_h, "blow-up blob expression");
    gen->add_option("--t", gen_t, "blow-up factor / amalgam t / oversat t");
    gen->add_option("--d", gen_d, "regreg degree parameter (even)");
    gen->add_option("--p", gen_p, "field extension degree");
    gen->add_option("--s", gen_s, "clique parameter s");
    gen->add_option("--q", gen_q, "multipartite part size");
    gen->add_option("--k", gen_k, "matching size k");

    // ---- check ----
    auto* check = app.add_subcommand("check", "verify a property of a graph file");
    std::string check_in, check_pattern, check_property, check_mode = "exhaustive";
    std::string check_format = "auto";
    long long check_samples = 0;
    std::uint64_t check_seed = 0;
    int check_workers = 0;
    check->add_option("--in", check_in, "input graph file")->required();
    check->add_option("--pattern", check_pattern, "pattern key (K3, F6, Kprime:3:2, ...)");
    check->add_option("--property", check_property,
                      "free|saturated|oversaturated|rrsat|regular")
        ->required();
    check->add_option("--format", check_format, "graph6|edgelist|auto");
    check->add_option("--mode", check_mode, "exhaustive|sampled")
        ->check(CLI::IsMember({"exhaustive", "sampled"}));
    check->add_option("--samples", check_samples, "sampled mode: number of non-edges");
    check->add_option("--seed", check_seed, "sampled mode: RNG seed");
    check->add_option("--workers", check_workers, "worker threads (default REGSAT_WORKERS)");

    // ---- search ----
    auto* search = app.add_subcommand("search", "exhaustive regular-saturated search");
    int search_n = 0;
    std::string search_pattern, search_store;
    long long search_samples = 0;
    std::uint64_t search_seed = 0;
    search->add_option("--n", search_n, "order")->required();
    search->add_option("--pattern", search_pattern, "pattern key")->required();
    search->add_option("--store", search_store, "JSON-lines store to extend");
    search->add_option("--samples", search_samples, "random graphs per degree when n > 12");
    search->add_option("--seed", search_seed, "sampling seed");

    // ---- plan ----
    auto* plan = app.add_subcommand("plan", "iterated amalgamation schedule");
    int plan_s = 0, plan_q = 0, plan_m = 1;
    std::string plan_seed, plan_out, plan_prefix;
    plan->add_option("--s", plan_s, "clique parameter")->required();
    plan->add_option("--q", plan_q, "part size")->required();
    plan->add_option("--seed", plan_seed, "seed graph expression")->required();
    plan->add_option("--m", plan_m, "iterations");
    plan->add_option("--out", plan_out, "plan JSON path")->required();
    plan->add_option("--graph-prefix", plan_prefix, "write F_i to <prefix>Fi.g6");

    // ---- bounds ----
    auto* bounds = app.add_subcommand("bounds", "pattern cycle/diameter bounds and inequalities");
    std::string bounds_pattern;
    long long bn = 0, bd = -1, bt = 0;
    bounds->add_option("--pattern", bounds_pattern, "pattern key")->required();
    bounds->add_option("--n", bn, "order for the inequalities");
    bounds->add_option("--d", bd, "degree for the inequalities");
    bounds->add_option("--t", bt, "clique parameter for d(d-1) >= t(n-d-1)");

    // ---- table ----
    auto* table = app.add_subcommand("table", "render the search store");
    std::string table_store;
    table->add_option("--store", table_store, "JSON-lines store")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;  // --help is not an error
    }

    try {
        if (gen->parsed()) {
            json a;
            if (gen->count("--n")) a["n"] = gen_n;
            if (gen->count("--t")) a["t"] = gen_t;
            if (gen->count("--d")) a["d"] = gen_d;
            if (gen->count("--p")) a["p"] = gen_p;
            if (gen->count("--s")) a["s"] = gen_s;
            if (gen->count("--q")) a["q"] = gen_q;
            if (gen->count("--k")) a["k"] = gen_k;
            if (gen->count("--spec")) a["spec"] = gen_spec;
            if (gen->count("--left")) a["left"] = gen_left;
            if (gen->count("--right")) a["right"] = gen_right;
            if (gen->count("--g")) a["g"] = gen_g;
            if (gen->count("--blob")) a["blob"] = gen_h;
            if (gen->count("--set")) {
                std::vector<int> vals;
                std::stringstream ss(gen_set);
                std::string tok;
                while (std::getline(ss, tok, ',')) vals.push_back(std::stoi(tok));
                a["set"] = vals;
            }
            GenOutput out = run_construction(gen_name, a);
            write_graph(gen_out, out.graph, gen_format);
            json meta;
            meta["construction"] = gen_name;
            meta["params"] = out.params;
            meta["n"] = out.graph.order();
            meta["d"] = degree_field(out.graph);
            meta["edges"] = out.graph.edge_count();
            meta["format"] = gen_format;
            meta["graph_file"] = gen_out;
            if (!gen_labels.empty() && !out.labels.empty()) {
                std::string text;
                for (const auto& line : out.labels) text += line + "\n";
                write_atomic(gen_labels, text);
                meta["label_map"] = gen_labels;
            }
            write_atomic(gen_out + ".json", meta.dump(2) + "\n");
            std::cout << meta.dump(2) << std::endl;
            return kExitPass;
        }
        if (check->parsed()) {
            CheckOptions opt;
            opt.workers = check_workers;
            if (check_mode == "sampled") {
                opt.mode = CheckOptions::Mode::sampled;
                opt.samples = check_samples;
                opt.seed = check_seed;
                if (opt.samples <= 0)
                    throw CLI::ValidationError("check", "sampled mode requires --samples > 0");
                if (!check->count("--seed"))
                    throw CLI::ValidationError("check", "sampled mode requires --seed");
            }
            if (check_property != "regular" && check_pattern.empty())
                throw CLI::ValidationError("check", "--pattern is required for this property");
            Graph g = read_graph(check_in, check_format);
            return do_check(g, check_pattern, check_property, opt);
        }
        if (search->parsed()) {
            PatternGraph f = resolve_pattern(search_pattern);
            SearchOptions opt;
            opt.samples = search_samples;
            opt.seed = search_seed;
            SearchResult result;
            if (!search_store.empty()) {
                auto results = rsat_table(search_n, search_n, f, search_store, opt);
                result = results.at(0);
            } else {
                result = find_regular_saturated(search_n, f, opt);
            }
            std::cout << result.to_json().dump(2) << std::endl;
            return kExitPass;
        }
        if (plan->parsed()) {
            Graph seed = graph_from_expression(plan_seed);
            Theorem3Plan p = theorem3_plan(plan_s, plan_q, seed, plan_m);
            write_atomic(plan_out, p.to_json().dump(2) + "\n");
            if (!plan_prefix.empty())
                for (std::size_t i = 0; i < p.graphs.size(); ++i)
                    write_graph(plan_prefix + "F" + std::to_string(i) + ".g6", p.graphs[i],
                                "graph6");
            std::cout << p.to_json().dump(2) << std::endl;
            return kExitPass;
        }
        if (bounds->parsed()) {
            PatternGraph f = resolve_pattern(bounds_pattern);
            BoundReport b = prop2_bounds(f);
            json out;
            out["pattern"] = f.name;
            out["bounds"] = b.to_json();
            bool pass = true;
            if (bn > 0 && bd >= 0) {
                auto rep = check_inequalities(bn, bd, b.m, b.r,
                                              bt > 0 ? std::optional<long long>(bt)
                                                     : std::nullopt);
                out["inequalities"] = rep.to_json();
                pass = rep.pass;
            }
            std::cout << out.dump(2) << std::endl;
            return pass ? kExitPass : kExitPropertyFail;
        }
        if (table->parsed()) {
            std::ifstream in(table_store);
            if (!in) throw std::runtime_error("cannot read store " + table_store);
            std::string line;
            std::cout << "n\tF\trsat\texhaustive\toutcomes (d:exists)\n";
            while (std::getline(in, line)) {
                if (line.empty()) continue;
                auto r = SearchResult::from_json(json::parse(line));
                std::cout << r.n << '\t' << r.pattern_name << '\t';
                if (r.rsat_value)
                    std::cout << *r.rsat_value;
                else
                    std::cout << "none";
                std::cout << '\t' << (r.exhaustive ? "yes" : "no") << '\t';
                for (const auto& o : r.outcomes)
                    std::cout << o.d << ':' << (o.exists ? '1' : '0') << ' ';
                std::cout << '\n';
            }
            return kExitPass;
        }
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return kExitUsage;
    }
    return kExitUsage;
}

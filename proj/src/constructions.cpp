#include "regsat/constructions.hpp"

#include <stdexcept>

namespace regsat {

Graph empty_graph(int n) {
    if (n < 0) throw std::invalid_argument("empty_graph: negative order");
    return Graph(n);
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path_graph: need n >= 1");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph star_graph(int leaves) {
    if (leaves < 1) throw std::invalid_argument("star_graph: need at least one leaf");
    Graph g(leaves + 1);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

Graph matching_graph(int k) {
    if (k < 1) throw std::invalid_argument("matching_graph: need k >= 1");
    Graph g(2 * k);
    for (int i = 0; i < k; ++i) g.add_edge(2 * i, 2 * i + 1);
    return g;
}

Graph complete_multipartite(const std::vector<int>& sizes) {
    int n = 0;
    for (int s : sizes) {
        if (s < 1) throw std::invalid_argument("complete_multipartite: part size must be >= 1");
        n += s;
    }
    Graph g(n);
    int a_start = 0;
    for (std::size_t a = 0; a < sizes.size(); ++a) {
        int b_start = a_start + sizes[a];
        for (std::size_t b = a + 1; b < sizes.size(); ++b) {
            for (int i = 0; i < sizes[a]; ++i)
                for (int j = 0; j < sizes[b]; ++j) g.add_edge(a_start + i, b_start + j);
            b_start += sizes[b];
        }
        a_start += sizes[a];
    }
    return g;
}

Graph circulant(const CirculantSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("circulant: need n >= 1");
    for (int a : spec.connection)
        if (a < 1 || a > spec.n / 2)
            throw std::invalid_argument("circulant: residue " + std::to_string(a) +
                                        " outside [1, n/2]");
    Graph g(spec.n);
    for (int i = 0; i < spec.n; ++i)
        for (int a : spec.connection) g.add_edge(i, (i + a) % spec.n);
    return g;
}

CirculantSpec k3_connection_set(int n) {
    if (n % 2 == 0) throw std::invalid_argument("k3_connection_set: n must be odd");
    if (n < 1) throw std::invalid_argument("k3_connection_set: need n >= 1");
    int r = n % 10;
    const char* case_name;
    int y;
    int extras;  // number of even residues 2y+2, 2y+4, ...
    switch (r) {
        case 1: case_name = "I";   y = (n - 6) / 5;  extras = 1; break;
        case 3: case_name = "II";  y = (n - 18) / 5; extras = 4; break;
        case 5: case_name = "III"; y = (n - 10) / 5; extras = 2; break;
        case 7: case_name = "IV";  y = (n - 22) / 5; extras = 5; break;
        default: case_name = "V";  y = (n - 14) / 5; extras = 3; break;
    }
    if (y < 1)
        throw std::invalid_argument(std::string("k3_connection_set: n=") + std::to_string(n) +
                                    " below case " + case_name + " threshold");
    CirculantSpec spec;
    spec.n = n;
    for (int a = 1; a <= y; a += 2) spec.connection.insert(a);
    for (int i = 1; i <= extras; ++i) {
        int a = 2 * y + 2 * i;
        if (a > n / 2)
            throw std::invalid_argument(std::string("k3_connection_set: case ") + case_name +
                                        " residue " + std::to_string(a) + " exceeds n/2");
        spec.connection.insert(a);
    }
    return spec;
}

CirculantSpec k4_connection_set(int n) {
    if (n < 14 || n % 8 != 6)
        throw std::invalid_argument("k4_connection_set: n must be 8k+6 with k >= 1");
    int k = (n - 6) / 8;
    CirculantSpec spec;
    spec.n = n;
    for (int j = 0; j <= k; ++j) {
        spec.connection.insert(4 * j + 1);
        spec.connection.insert(4 * j + 2);
    }
    return spec;
}

Graph blow_up(const Graph& g, const Graph& h) {
    const int ng = g.order(), nh = h.order();
    Graph out(ng * nh);
    for (int u = 0; u < ng; ++u) {
        // intra-blob copy of H
        for (int i = 0; i < nh; ++i)
            for (int j = i + 1; j < nh; ++j)
                if (h.has_edge(i, j)) out.add_edge(u * nh + i, u * nh + j);
        // complete links along G-edges
        for (int v = u + 1; v < ng; ++v) {
            if (!g.has_edge(u, v)) continue;
            for (int i = 0; i < nh; ++i)
                for (int j = 0; j < nh; ++j) out.add_edge(u * nh + i, v * nh + j);
        }
    }
    return out;
}

Graph join(const Graph& g, const Graph& h) {
    const int ng = g.order(), nh = h.order();
    Graph out(ng + nh);
    for (int i = 0; i < ng; ++i)
        for (int j = i + 1; j < ng; ++j)
            if (g.has_edge(i, j)) out.add_edge(i, j);
    for (int i = 0; i < nh; ++i)
        for (int j = i + 1; j < nh; ++j)
            if (h.has_edge(i, j)) out.add_edge(ng + i, ng + j);
    for (int i = 0; i < ng; ++i)
        for (int j = 0; j < nh; ++j) out.add_edge(i, ng + j);
    return out;
}

std::optional<int> join_regular_degree(const Graph& g, const Graph& h) {
    auto sg = degree_summary(g), sh = degree_summary(h);
    if (!sg.regular_degree || !sh.regular_degree) return std::nullopt;
    int lhs = *sh.regular_degree + g.order();
    int rhs = *sg.regular_degree + h.order();
    if (lhs != rhs) return std::nullopt;
    return lhs;
}

RegRegWitness regreg_witness(int t, int d) {
    if (t < 1) throw std::invalid_argument("regreg_witness: need t >= 1");
    if (d < 2 || d % 2 != 0) throw std::invalid_argument("regreg_witness: need even d >= 2");
    const int bt = d * t - t;       // size of each B_i
    const long long n = 1LL + static_cast<long long>(d) * d * t;
    RegRegWitness w;
    w.special_vertex = 0;
    w.constructed_vertex_count = n;
    w.stated_vertex_count = 1LL + static_cast<long long>(d) * t * d * t;
    Graph g(static_cast<int>(n));
    auto a_vertex = [&](int i, int k) { return 1 + i * t + k; };            // i in [0,d), k in [0,t)
    auto b_vertex = [&](int i, int k) { return 1 + d * t + i * bt + k; };   // i in [0,d), k in [0,bt)
    for (int i = 0; i < d; ++i) {
        for (int k = 0; k < t; ++k) {
            g.add_edge(0, a_vertex(i, k));
            for (int k2 = k + 1; k2 < t; ++k2) g.add_edge(a_vertex(i, k), a_vertex(i, k2));
            for (int k2 = 0; k2 < bt; ++k2) g.add_edge(a_vertex(i, k), b_vertex(i, k2));
        }
    }
    // (dt-t)-regular bipartite circulant between the first and second halves
    // of the B_i's: left slot x joined to right slots x .. x+bt-1 (mod side).
    const int side = (d / 2) * bt;
    auto left = [&](int x) { return b_vertex(x / bt, x % bt); };
    auto right = [&](int x) { return b_vertex(d / 2 + x / bt, x % bt); };
    for (int x = 0; x < side; ++x)
        for (int o = 0; o < bt; ++o) g.add_edge(left(x), right((x + o) % side));
    w.labels.reserve(g.order());
    w.labels.emplace_back("v");
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < t; ++k)
            w.labels.push_back("A" + std::to_string(i + 1) + ":" + std::to_string(k + 1));
    for (int i = 0; i < d; ++i)
        for (int k = 0; k < bt; ++k)
            w.labels.push_back("B" + std::to_string(i + 1) + ":" + std::to_string(k + 1));
    w.graph = std::move(g);
    return w;
}

}  // namespace regsat

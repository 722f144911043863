#include "regsat/polarity.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "regsat/constructions.hpp"

namespace regsat {

std::uint32_t GF2m::modulus_for(int p) {
    switch (p) {
        case 1: return 0x3;       // x+1 (GF(2): reduction never fires)
        case 2: return 0x7;       // x^2+x+1
        case 3: return 0xb;       // x^3+x+1
        case 4: return 0x13;      // x^4+x+1
        case 5: return 0x25;      // x^5+x^2+1
        case 6: return 0x43;      // x^6+x+1
        case 7: return 0x83;      // x^7+x+1
        case 8: return 0x11b;     // x^8+x^4+x^3+x+1
        case 9: return 0x211;     // x^9+x^4+1
        case 10: return 0x409;    // x^10+x^3+1
        case 11: return 0x805;    // x^11+x^2+1
        case 12: return 0x1053;   // x^12+x^6+x^4+x+1
        case 13: return 0x201b;   // x^13+x^4+x^3+x+1
        case 14: return 0x4443;   // x^14+x^10+x^6+x+1
        case 15: return 0x8003;   // x^15+x+1
        case 16: return 0x1100b;  // x^16+x^12+x^3+x+1
        default:
            throw std::invalid_argument("GF2m: extension degree must be in [1,16]");
    }
}

GF2m::GF2m(int p) : p_(p), modulus_(modulus_for(p)) {}

std::uint32_t GF2m::mul(std::uint32_t a, std::uint32_t b) const {
    std::uint64_t acc = 0, aa = a;
    while (b) {
        if (b & 1) acc ^= aa;
        aa <<= 1;
        b >>= 1;
    }
    for (int bit = 2 * p_ - 2; bit >= p_; --bit)
        if ((acc >> bit) & 1) acc ^= static_cast<std::uint64_t>(modulus_) << (bit - p_);
    return static_cast<std::uint32_t>(acc);
}

std::uint32_t GF2m::pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t result = 1;
    while (e) {
        if (e & 1) result = mul(result, a);
        a = mul(a, a);
        e >>= 1;
    }
    return result;
}

std::uint32_t GF2m::inv(std::uint32_t a) const {
    if (a == 0) throw std::invalid_argument("GF2m::inv: zero has no inverse");
    return pow(a, (std::uint64_t(1) << p_) - 2);
}

namespace {

std::string hex_triple(const ProjectivePoint& pt) {
    std::ostringstream os;
    os << std::hex << pt[0] << ' ' << pt[1] << ' ' << pt[2];
    return os.str();
}

}  // namespace

std::vector<std::string> PolarityGraph::labels() const {
    std::vector<std::string> out;
    out.reserve(points.size());
    for (std::size_t i = 0; i < points.size(); ++i)
        out.push_back(std::to_string(i) + " " + hex_triple(points[i]));
    return out;
}

PolarityGraph polarity_graph(int p) {
    if (p < 1 || p > 8)
        throw std::invalid_argument("polarity_graph: p must be in [1,8]");
    GF2m field(p);
    const std::uint32_t q = field.order();
    PolarityGraph out;
    // normalized representatives: (1,y,z), then (0,1,z), then (0,0,1)
    out.points.reserve(static_cast<std::size_t>(q) * q + q + 1);
    for (std::uint32_t y = 0; y < q; ++y)
        for (std::uint32_t z = 0; z < q; ++z) out.points.push_back({1, y, z});
    for (std::uint32_t z = 0; z < q; ++z) out.points.push_back({0, 1, z});
    out.points.push_back({0, 0, 1});
    const int n = static_cast<int>(out.points.size());
    auto dot = [&](const ProjectivePoint& a, const ProjectivePoint& b) {
        return field.add(field.add(field.mul(a[0], b[0]), field.mul(a[1], b[1])),
                         field.mul(a[2], b[2]));
    };
    Graph g(n);
    for (int i = 0; i < n; ++i) {
        if (dot(out.points[i], out.points[i]) == 0) out.absolute.push_back(i);
        for (int j = i + 1; j < n; ++j)
            if (dot(out.points[i], out.points[j]) == 0) g.add_edge(i, j);
    }
    // the absolute points are exactly S = {(e,x,e+x)} u {(0,e,e)};
    // (1,x,1+x) sits at index x*q + (1^x), (0,1,1) at q*q + 1
    std::vector<int> expected;
    for (std::uint32_t x = 0; x < q; ++x)
        expected.push_back(static_cast<int>(x * q + (1u ^ x)));
    expected.push_back(static_cast<int>(q * q + 1));
    std::sort(expected.begin(), expected.end());
    if (expected != out.absolute)
        throw std::logic_error("polarity_graph: absolute points differ from S");
    for (int i = 0; i < n; ++i)
        if (out.points[i][0] == 1 && out.points[i][1] == 1 && out.points[i][2] == 1)
            out.unit_point = i;
    out.graph = std::move(g);
    return out;
}

TwinPolarity twin_augmented_polarity(int p) {
    PolarityGraph base = polarity_graph(p);
    const int n = base.graph.order();
    TwinPolarity out;
    Graph g(n + 1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (base.graph.has_edge(i, j)) g.add_edge(i, j);
    for (int u : base.graph.neighbors(base.unit_point)) g.add_edge(n, u);
    out.twin = n;
    out.labels = base.labels();
    out.labels.push_back(std::to_string(n) + " twin");
    out.graph = std::move(g);
    return out;
}

Graph oversaturated_family(int p, int t) {
    if (t < 1) throw std::invalid_argument("oversaturated_family: need t >= 1");
    return blow_up(twin_augmented_polarity(p).graph, complete_graph(t));
}

}  // namespace regsat

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "regsat/graph.hpp"

namespace regsat {

// GF(2^p) with a fixed low-weight irreducible modulus per p (reproducible
// labelings); elements are polynomial bit masks in [0, 2^p).
class GF2m {
public:
    explicit GF2m(int p);  // 1 <= p <= 16

    int p() const { return p_; }
    std::uint32_t order() const { return std::uint32_t(1) << p_; }
    std::uint32_t modulus() const { return modulus_; }
    std::uint32_t one() const { return 1; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return a ^ b; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
    std::uint32_t inv(std::uint32_t a) const;  // throws on a == 0

    static std::uint32_t modulus_for(int p);

private:
    int p_;
    std::uint32_t modulus_;
};

// Projective point (a,b,c), not all zero, normalized so the first nonzero
// coordinate is the unit.
using ProjectivePoint = std::array<std::uint32_t, 3>;

struct PolarityGraph {
    Graph graph;
    std::vector<ProjectivePoint> points;  // index -> point
    std::vector<int> absolute;            // self-orthogonal points, ascending
    int unit_point = -1;                  // index of (e,e,e)
    std::vector<std::string> labels() const;
};

// Orthogonality graph on the projective points over GF(2^p): distinct points
// adjacent iff their dot product vanishes; absolute points carry no loop.
PolarityGraph polarity_graph(int p);

struct TwinPolarity {
    Graph graph;
    int twin = -1;  // the added vertex
    std::vector<std::string> labels;
};

// Adds a non-adjacent twin of (e,e,e); (2^p+1)-regular on 2^(2p)+2^p+2
// vertices with diameter 2.
TwinPolarity twin_augmented_polarity(int p);

// blow_up(twin_augmented_polarity(p), K_t).
Graph oversaturated_family(int p, int t);

}  // namespace regsat

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "annular/perm.hpp"
#include "json.hpp"

namespace annular {

struct PartitionedPermutation {
    SetPartition v;
    Permutation p;

    PartitionedPermutation() = default;
    PartitionedPermutation(SetPartition v_, Permutation p_); // requires cycles(p) <= v

    int length() const { return 2 * v.length() - p.length(); }
    std::string str() const; // ({1,2|3},(1,2)(3))
    nlohmann::json to_json() const;
    static PartitionedPermutation from_json(const nlohmann::json& j);

    bool operator==(const PartitionedPermutation& o) const { return v == o.v && p == o.p; }
};

int pp_length(const PartitionedPermutation& pp);

// Bipartite graph: black vertices are blocks of v (ids 0..black-1), white
// vertices are blocks of p v gamma (ids black..black+white-1), one edge per
// cycle of p.
struct GammaGraph {
    int black = 0;
    int white = 0;
    std::vector<std::pair<int, int>> edges;
    bool is_forest = false;
    int components = 0;
};
GammaGraph gamma_forest(const SetPartition& v, const Permutation& p, const Permutation& gamma);
GammaGraph gamma_forest(const SetPartition& v, const Permutation& p, const Shape& shape);

// (V, pi) <= (U, g): V <= U, Gamma(V, pi, g) a forest, pi planar relative to g
bool pp_leq(const PartitionedPermutation& a, const PartitionedPermutation& b);
// (V, pi) in PS_NC(1_m, gamma_shape)
bool in_ps_nc(const PartitionedPermutation& pp, const Shape& shape);

enum class PSFamily {
    SNC,         // V = 0_pi, pi in S_NC(shape)
    F111,        // one V-block joins a cycle from each circle
    F211,        // two V-blocks each join two cycles on different circles
    F11,         // pi in S_NC(pair) x NC(lone circle), one join across
    NC2_111,
    NC2_211,
    NC2_11,
    NC2_11_2through,
    NC2_11_t,
    NC211_111,
};
std::string family_name(PSFamily f);
PSFamily family_from_name(const std::string& s);
bool is_pairing_family(PSFamily f);

struct PSItem {
    PartitionedPermutation pp;
    PSFamily family = PSFamily::SNC;
    // circles used: F11 stores (i1, i2, i3) with {i1,i2} the annulus and i3
    // the lone circle; F211 stores (i1, center, i3); otherwise (0, 1, 2).
    std::array<int, 3> circles{0, 1, 2};
};

// Exact PS_NC(1_m, gamma_shape) for r <= 3, canonically ordered.
// max_cycle > 0 drops every element with a longer cycle (used when the
// cumulant table vanishes beyond that size).
std::vector<PSItem> enumerate_ps_nc(const Shape& shape, int max_cycle = 0);
std::vector<PSItem> enumerate_family(const Shape& shape, PSFamily f, int max_cycle = 0);

std::int64_t family_count_enumerated(const Shape& shape, PSFamily f);
// Closed forms (NC2_111, NC2_211, NC2_11_2through, NC2_11_t, NC211_111);
// NC2_11 via the split formula over annular pairing counts.
std::optional<std::int64_t> family_count_closed(const Shape& shape, PSFamily f);
std::int64_t family_count(const Shape& shape, PSFamily f);

} // namespace annular

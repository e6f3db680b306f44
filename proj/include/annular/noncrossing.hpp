#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "annular/perm.hpp"

namespace annular {

bool is_planar_relative(const Permutation& p, const Permutation& gamma);
bool is_planar_relative(const Permutation& p, const Shape& shape);

// 2-cycles of a pairing whose points sit on different circles
int through_strings(const Permutation& p, const Shape& shape);

enum class AnnularKind { NC, NC2, SNC, NC2Through };

struct AnnularClass {
    Shape shape;
    AnnularKind kind = AnnularKind::NC;
    int k = 0; // through-string count, NC2Through only

    static AnnularClass nc(int n) { return {Shape({n}), AnnularKind::NC, 0}; }
    static AnnularClass nc2(const Shape& s) { return {s, AnnularKind::NC2, 0}; }
    static AnnularClass snc(const Shape& s) { return {s, AnnularKind::SNC, 0}; }
    static AnnularClass nc2_through(int m1, int m2, int k) { return {Shape({m1, m2}), AnnularKind::NC2Through, k}; }
    std::string str() const;
};

// Exact set, sorted by cycle notation. Throws BoundExceeded past the bound.
std::vector<Permutation> enumerate(const AnnularClass& cls);
std::int64_t count(const AnnularClass& cls);
// Closed forms for NC(n), NC2(n), NC2^(k)(m1,m2) and NC2(m1,m2).
std::optional<std::int64_t> count_closed(const AnnularClass& cls);

std::int64_t binomial(int n, int k);
std::int64_t catalan(int n);
// |NC2(m)|, with |NC2(0)| = 1 and 0 for odd m
std::int64_t nc2_count(int m);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

// Low-level search behind enumerate(): planar permutations relative to
// gamma_shape, built by inserting 1..m one at a time. Every prefix of a
// planar permutation (later points deleted from their cycles) is planar,
// so non-planar prefixes are cut.
struct PlanarSearch {
    int max_cycle = 0;      // 0: no limit
    int singletons = -1;    // exact number of fixed points, -1: any
    bool connected = true;  // require p v gamma = 1_m
};
void for_each_planar(const Shape& shape, const PlanarSearch& opts,
                     const std::function<void(const Permutation&)>& visit);

} // namespace annular

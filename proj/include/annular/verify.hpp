#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "annular/perm.hpp"
#include "annular/poly.hpp"
#include "json.hpp"

namespace annular {

struct CheckResult {
    std::string name;
    bool pass = true;
    std::int64_t cases = 0;
    std::string detail; // first counterexample when failing
};

struct Report {
    std::string suite;
    std::vector<CheckResult> checks;
    bool ok() const;
    nlohmann::json to_json() const;
    std::string text() const;
};

// Ordered r-part compositions with min_m <= m <= max_m, optionally only even m.
std::vector<Shape> compositions(int r, int min_m, int max_m, bool even_m_only = false);

// Exact counting identities: closed forms up to max_closed, enumeration up to max_enum.
Report verify_identities(int max_closed, int max_enum);
// Structural graph theorems over `samples` random partitions per shape, m <= max_m.
Report verify_parity(int max_m, int samples, std::uint64_t seed);
// Classification against the pairing image and a brute-force cumulant expansion, m <= max_m.
Report verify_oracle(int max_m);

// Leading coefficient of the third classical cumulant contribution of pi:
// sum over sigma <= pi-bar with sigma v gamma = 1 of the product of entry
// cumulants. Off-diagonal blocks need equal counts of both orientations.
Poly brute_weight(const Shape& shape, const SetPartition& pi);

} // namespace annular

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "annular/poly.hpp"
#include "annular/pperm.hpp"
#include "json.hpp"

namespace annular {

// Index multiset of a cumulant or moment, stored sorted: (1,2) is kappa_{1,2}.
using Key = std::vector<int>;
Key make_key(std::vector<int> args);
std::string key_str(const Key& k); // "1,1,2"

// Keyed by index multisets of order 1..3. Lookups sort their argument, so
// tables are symmetric by construction.
class IndexedTable {
public:
    enum class Missing { Zero, Symbol, Error };

    IndexedTable() = default;
    IndexedTable(std::string prefix, Missing missing) : prefix_(std::move(prefix)), missing_(missing) {}
    // every entry is the formal symbol prefix_i_j_k
    static IndexedTable symbolic(const std::string& prefix) { return {prefix, Missing::Symbol}; }

    void set(std::vector<int> args, Poly value);
    Poly get(std::vector<int> args) const;
    bool contains(std::vector<int> args) const;
    const std::map<Key, Poly>& entries() const { return values_; }
    const std::string& prefix() const { return prefix_; }

    // > 0: entries with any index above this vanish (lets sums skip terms)
    int max_index = 0;

    nlohmann::json to_json() const;

private:
    std::string prefix_ = "kappa";
    Missing missing_ = Missing::Zero;
    std::map<Key, Poly> values_;
};
using CumulantTable = IndexedTable;
using MomentTable = IndexedTable;

// "kappa_1_2"
std::string index_symbol(const std::string& prefix, const Key& k);

// kappa_2 = 1, kappa_{2,2} = 2 k4, kappa_{2,2,2} = 4 k6, kappa_{1,1,2} = kdiag4 - 2 k4, 0 otherwise
CumulantTable wigner_cumulants();

// product over V-blocks of the cumulant indexed by the cycle sizes inside it
Poly kappa_of(const PartitionedPermutation& pp, const CumulantTable& table);

// alpha_{args} as the sum of kappa_(V,pi) over PS_NC(args); order = args.size() in 1..3
Poly alpha_from_cumulants(const std::vector<int>& args, const CumulantTable& table);

// Inverts the forward sums for every key of order <= max_order and index sum
// <= max_sum. Keys with equal (sum, order) are coupled and solved together.
CumulantTable cumulants_from_moments(const MomentTable& moments, int max_order, int max_sum);
Poly cumulant_from_moments(const std::vector<int>& args, const MomentTable& moments);

std::int64_t alpha_first(int m);
Poly alpha_second(int m1, int m2);
Poly alpha_third_closed(int m1, int m2, int m3);
// sum of limit-graph weights over P(m)
Poly alpha_third_graphsum(int m1, int m2, int m3);

} // namespace annular

#pragma once
// Brute-force reference implementations. They only use the permutation and
// partition value types and never call the searches they are checked against.

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <tuple>
#include <vector>

#include "annular/perm.hpp"

namespace oracle {

using annular::Permutation;
using annular::SetPartition;
using annular::Shape;

inline std::vector<Permutation> all_permutations(int m)
{
    std::vector<int> img(m);
    std::iota(img.begin(), img.end(), 0);
    std::vector<Permutation> out;
    do
        out.emplace_back(img);
    while (std::next_permutation(img.begin(), img.end()));
    return out;
}

// all set partitions, by recursive insertion
inline std::vector<SetPartition> all_partitions(int m)
{
    std::vector<SetPartition> out;
    std::vector<std::vector<int>> blocks;
    std::function<void(int)> rec = [&](int i) {
        if (i == m) {
            out.push_back(SetPartition::from_blocks(m, blocks));
            return;
        }
        // by index: the recursion grows `blocks`
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            blocks[b].push_back(i);
            rec(i + 1);
            blocks[b].pop_back();
        }
        blocks.push_back({i});
        rec(i + 1);
        blocks.pop_back();
    };
    rec(0);
    return out;
}

inline int cycle_count(const Permutation& p)
{
    std::vector<char> seen(p.size(), 0);
    int c = 0;
    for (int i = 0; i < p.size(); ++i) {
        if (seen[i])
            continue;
        ++c;
        for (int j = i; !seen[j]; j = p(j))
            seen[j] = 1;
    }
    return c;
}

inline Permutation after(const Permutation& p, const Permutation& q) // p o q
{
    std::vector<int> img(p.size());
    for (int i = 0; i < p.size(); ++i)
        img[i] = p(q(i));
    return Permutation(img);
}

inline Permutation inverse(const Permutation& p)
{
    std::vector<int> img(p.size());
    for (int i = 0; i < p.size(); ++i)
        img[p(i)] = i;
    return Permutation(img);
}

// number of connected components when the points are linked along p and q
inline int orbits(int m, const std::vector<std::vector<int>>& links)
{
    std::vector<int> par(m);
    std::iota(par.begin(), par.end(), 0);
    std::function<int(int)> find = [&](int x) { return par[x] == x ? x : par[x] = find(par[x]); };
    int comps = m;
    for (auto& l : links)
        for (int i = 0; i < m; ++i) {
            int a = find(i), b = find(l[i]);
            if (a != b) {
                par[a] = b;
                --comps;
            }
        }
    return comps;
}

inline std::vector<int> labels_of(const Permutation& p)
{
    return p.images();
}

// |p| + |p^-1 gamma| = |gamma| + 2(r - 1) with p v gamma = 1
inline bool annular_planar_connected(const Permutation& p, const Shape& s)
{
    int m = s.m();
    auto g = s.gamma();
    int lp = m - cycle_count(p);
    int lr = m - cycle_count(after(inverse(p), g));
    int lg = m - s.r();
    return lp + lr == lg + 2 * (s.r() - 1) && orbits(m, {p.images(), g.images()}) == 1;
}

// single circle: |p| + |p^-1 gamma| = |gamma|
inline bool disc_planar(const Permutation& p)
{
    int m = p.size();
    auto g = Shape({m}).gamma();
    return (m - cycle_count(p)) + (m - cycle_count(after(inverse(p), g))) == m - 1;
}

inline bool is_pairing(const Permutation& p)
{
    for (int i = 0; i < p.size(); ++i)
        if (p(i) == i || p(p(i)) != i)
            return false;
    return true;
}

// NC(n) as partitions without a crossing a < b < c < d, a~c, b~d, a!~b
inline std::vector<SetPartition> noncrossing_partitions(int n)
{
    std::vector<SetPartition> out;
    for (auto& p : all_partitions(n)) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            for (int b = a + 1; b < n && ok; ++b)
                for (int c = b + 1; c < n && ok; ++c)
                    for (int d = c + 1; d < n && ok; ++d)
                        if (p.block_of(a) == p.block_of(c) && p.block_of(b) == p.block_of(d) &&
                            p.block_of(a) != p.block_of(b))
                            ok = false;
        if (ok)
            out.push_back(p);
    }
    return out;
}

inline std::set<std::vector<int>> planar_connected_set(const Shape& s, bool pairings_only)
{
    std::set<std::vector<int>> out;
    for (auto& p : all_permutations(s.m()))
        if ((!pairings_only || is_pairing(p)) && annular_planar_connected(p, s))
            out.insert(p.images());
    return out;
}

// (V, pi) with V >= pi, V v gamma = 1, and some (W, pi^-1 gamma) with V v W = 1
// whose lengths add up to |(1, gamma)|; |(V, pi)| = 2(m - #V) - (m - #pi).
struct PSPair {
    std::vector<int> v_labels;
    std::vector<int> pi;
    bool operator<(const PSPair& o) const { return std::tie(pi, v_labels) < std::tie(o.pi, o.v_labels); }
    bool operator==(const PSPair& o) const = default;
};

inline std::vector<PSPair> ps_nc_by_length(const Shape& s)
{
    int m = s.m();
    auto g = s.gamma();
    auto parts = all_partitions(m);
    int top = 2 * (m - 1) - (m - s.r());
    auto refines = [&](const Permutation& p, const SetPartition& v) {
        for (int i = 0; i < m; ++i)
            if (v.block_of(i) != v.block_of(p(i)))
                return false;
        return true;
    };
    auto joined = [&](const SetPartition& a, const std::vector<int>& other) {
        std::vector<std::vector<int>> links;
        std::vector<int> la(m), lb(m);
        // link each point to the first point of its block
        std::vector<int> first_a(m, -1), first_b(m, -1);
        for (int i = 0; i < m; ++i) {
            if (first_a[a.block_of(i)] < 0)
                first_a[a.block_of(i)] = i;
            la[i] = first_a[a.block_of(i)];
        }
        return orbits(m, {la, other});
    };
    std::vector<PSPair> out;
    for (auto& p : all_permutations(m)) {
        auto sigma = after(inverse(p), g);
        int lp = m - cycle_count(p);
        for (auto& v : parts) {
            if (!refines(p, v) || joined(v, g.images()) != 1)
                continue;
            int lv = 2 * (m - v.block_count()) - lp;
            bool ok = false;
            for (auto& w : parts) {
                if (!refines(sigma, w))
                    continue;
                int lw = 2 * (m - w.block_count()) - (m - cycle_count(sigma));
                if (lv + lw != top)
                    continue;
                std::vector<int> lab_w(m), first(m, -1);
                for (int i = 0; i < m; ++i) {
                    if (first[w.block_of(i)] < 0)
                        first[w.block_of(i)] = i;
                    lab_w[i] = first[w.block_of(i)];
                }
                if (joined(v, lab_w) == 1) {
                    ok = true;
                    break;
                }
            }
            if (ok)
                out.push_back({v.labels(), p.images()});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace oracle

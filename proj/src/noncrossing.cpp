#include "annular/noncrossing.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "annular/config.hpp"

namespace annular {

bool is_planar_relative(const Permutation& p, const Permutation& gamma)
{
    if (p.size() != gamma.size())
        throw std::invalid_argument("is_planar_relative: size mismatch");
    auto pg = compose(p.inverse(), gamma);
    int lhs = p.length() + pg.length() + gamma.length();
    int rhs = 2 * (p.size() - join_block_count(p, gamma));
    return lhs == rhs;
}

bool is_planar_relative(const Permutation& p, const Shape& shape)
{
    return is_planar_relative(p, shape.gamma());
}

int through_strings(const Permutation& p, const Shape& shape)
{
    if (p.size() != shape.m())
        throw std::invalid_argument("through_strings: size mismatch");
    if (!p.is_pairing())
        throw std::invalid_argument("through_strings: not a pairing");
    int t = 0;
    for (int i = 0; i < p.size(); ++i)
        if (i < p(i) && shape.circle_of(i) != shape.circle_of(p(i)))
            ++t;
    return t;
}

std::string AnnularClass::str() const
{
    switch (kind) {
    case AnnularKind::NC:
        return "NC(" + shape.str() + ")";
    case AnnularKind::NC2:
        return "NC2(" + shape.str() + ")";
    case AnnularKind::SNC:
        return "S_NC(" + shape.str() + ")";
    case AnnularKind::NC2Through:
        return "NC2^(" + std::to_string(k) + ")(" + shape.str() + ")";
    }
    return {};
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t out;
    if (__builtin_mul_overflow(a, b, &out))
        throw std::overflow_error("integer overflow in a closed-form count");
    return out;
}

std::int64_t binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    k = std::min(k, n - k);
    __int128 acc = 1;
    for (int i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > std::numeric_limits<std::int64_t>::max())
            throw std::overflow_error("binomial overflow");
    }
    return static_cast<std::int64_t>(acc);
}

std::int64_t catalan(int n)
{
    return binomial(2 * n, n) / (n + 1);
}

std::int64_t nc2_count(int m)
{
    if (m < 0 || m % 2)
        return 0;
    return catalan(m / 2);
}

namespace {

struct Searcher {
    const Shape& shape;
    const PlanarSearch& opts;
    const std::function<void(const Permutation&)>& visit;
    int m;
    std::vector<int> gamma;
    std::vector<int> img, inv;
    std::vector<int> cyc_id, cyc_size;
    std::vector<int> stamp;
    int stamp_now = 0;
    int cycles = 0;
    int fixed = 0;

    Searcher(const Shape& s, const PlanarSearch& o, const std::function<void(const Permutation&)>& v)
        : shape(s), opts(o), visit(v), m(s.m()), gamma(s.gamma().images()), img(m), inv(m), cyc_id(m),
          cyc_size(m, 0), stamp(m, 0)
    {
        for (int i = 0; i < m; ++i)
            img[i] = inv[i] = cyc_id[i] = i;
    }

    // components of p v gamma, counted on the circles
    int join_count() const
    {
        int r = shape.r();
        std::vector<int> par(r);
        for (int j = 0; j < r; ++j)
            par[j] = j;
        auto find = [&](int x) {
            while (par[x] != x)
                x = par[x] = par[par[x]];
            return x;
        };
        int comps = r;
        for (int i = 0; i < m; ++i) {
            int a = find(shape.circle_of(i)), b = find(shape.circle_of(img[i]));
            if (a != b) {
                par[a] = b;
                --comps;
            }
        }
        return comps;
    }

    int kreweras_cycles()
    {
        ++stamp_now;
        int c = 0;
        for (int i = 0; i < m; ++i) {
            if (stamp[i] == stamp_now)
                continue;
            ++c;
            for (int j = i; stamp[j] != stamp_now; j = inv[gamma[j]])
                stamp[j] = stamp_now;
        }
        return c;
    }

    // m + 2#(p v gamma) == #(p) + #(p^-1 gamma) + r  <=>  planar
    bool planar(int joins)
    {
        int total_cycles = cycles + (m - placed);
        return m + 2 * joins == total_cycles + kreweras_cycles() + shape.r();
    }

    int placed = 0;

    void run(int i)
    {
        if (i == m) {
            if (opts.singletons >= 0 && fixed != opts.singletons)
                return;
            if (opts.max_cycle == 2 && opts.singletons == 0 && fixed != 0)
                return;
            if (opts.connected && join_count() != 1)
                return;
            visit(Permutation(img));
            return;
        }
        int remaining = m - i - 1;
        placed = i + 1;
        // i as a new fixed point
        {
            cyc_id[i] = i;
            cyc_size[i] = 1;
            ++cycles;
            ++fixed;
            if (!(opts.singletons >= 0 && fixed - remaining > opts.singletons) && planar(join_count()))
                run(i + 1);
            --fixed;
            --cycles;
            cyc_size[i] = 0;
            placed = i + 1;
        }
        // i inserted right after j inside j's cycle
        for (int j = 0; j < i; ++j) {
            int cid = cyc_id[j];
            int sz = cyc_size[cid];
            if (opts.max_cycle > 0 && sz >= opts.max_cycle)
                continue;
            int nxt = img[j];
            img[j] = i;
            img[i] = nxt;
            inv[i] = j;
            inv[nxt] = i;
            cyc_id[i] = cid;
            cyc_size[cid] = sz + 1;
            if (sz == 1)
                --fixed;
            if (!(opts.singletons >= 0 && fixed - remaining > opts.singletons) && planar(join_count()))
                run(i + 1);
            if (sz == 1)
                ++fixed;
            cyc_size[cid] = sz;
            cyc_id[i] = i;
            img[j] = nxt;
            inv[nxt] = j;
            img[i] = i;
            inv[i] = i;
            placed = i + 1;
        }
    }
};

} // namespace

void for_each_planar(const Shape& shape, const PlanarSearch& opts,
                     const std::function<void(const Permutation&)>& visit)
{
    Searcher s(shape, opts, visit);
    s.run(0);
}

namespace {

PlanarSearch search_for(const AnnularClass& cls)
{
    PlanarSearch o;
    if (cls.kind == AnnularKind::NC2 || cls.kind == AnnularKind::NC2Through) {
        o.max_cycle = 2;
        o.singletons = 0;
    }
    return o;
}

void validate(const AnnularClass& cls)
{
    if (cls.kind == AnnularKind::NC && cls.shape.r() != 1)
        throw std::invalid_argument("NC(n) takes a single part");
    if (cls.kind == AnnularKind::NC2Through && cls.shape.r() != 2)
        throw std::invalid_argument("NC2^(k) is defined for two circles only");
    check_bound(cls.shape.m(), cls.str());
}

bool keep(const AnnularClass& cls, const Permutation& p)
{
    return cls.kind != AnnularKind::NC2Through || through_strings(p, cls.shape) == cls.k;
}

} // namespace

std::vector<Permutation> enumerate(const AnnularClass& cls)
{
    validate(cls);
    std::vector<Permutation> out;
    if ((cls.kind == AnnularKind::NC2 || cls.kind == AnnularKind::NC2Through) && cls.shape.m() % 2)
        return out;
    for_each_planar(cls.shape, search_for(cls), [&](const Permutation& p) {
        if (keep(cls, p))
            out.push_back(p);
    });
    std::vector<std::pair<std::string, std::size_t>> keyed;
    keyed.reserve(out.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        keyed.emplace_back(out[i].str(), i);
    std::sort(keyed.begin(), keyed.end());
    std::vector<Permutation> sorted;
    sorted.reserve(out.size());
    for (auto& [k, i] : keyed)
        sorted.push_back(std::move(out[i]));
    return sorted;
}

std::int64_t count(const AnnularClass& cls)
{
    validate(cls);
    if ((cls.kind == AnnularKind::NC2 || cls.kind == AnnularKind::NC2Through) && cls.shape.m() % 2)
        return 0;
    std::int64_t c = 0;
    for_each_planar(cls.shape, search_for(cls), [&](const Permutation& p) {
        if (keep(cls, p))
            ++c;
    });
    return c;
}

std::optional<std::int64_t> count_closed(const AnnularClass& cls)
{
    const auto& s = cls.shape;
    switch (cls.kind) {
    case AnnularKind::NC:
        if (s.r() == 1)
            return catalan(s.m());
        return std::nullopt;
    case AnnularKind::NC2:
        if (s.r() == 1)
            return nc2_count(s.m());
        if (s.m() % 2)
            return 0;
        if (s.r() == 2) {
            std::int64_t total = 0;
            for (int k = 1; k <= std::min(s.part(0), s.part(1)); ++k)
                total += *count_closed(AnnularClass::nc2_through(s.part(0), s.part(1), k));
            return total;
        }
        return std::nullopt;
    case AnnularKind::NC2Through: {
        if (s.r() != 2)
            return std::nullopt;
        int m1 = s.part(0), m2 = s.part(1);
        if (cls.k < 1 || (m1 - cls.k) % 2 || (m2 - cls.k) % 2 || cls.k > std::min(m1, m2))
            return 0;
        if (cls.k == 2)
            return checked_mul(checked_mul(m1 * m2 / 2, nc2_count(m1)), nc2_count(m2));
        if (cls.k == 1)
            return checked_mul(checked_mul(m1 * m2, nc2_count(m1 - 1)), nc2_count(m2 - 1));
        // general k: k * C(m1, (m1-k)/2) * C(m2, (m2-k)/2)
        return checked_mul(checked_mul(cls.k, binomial(m1, (m1 - cls.k) / 2)), binomial(m2, (m2 - cls.k) / 2));
    }
    case AnnularKind::SNC:
        return std::nullopt;
    }
    return std::nullopt;
}

} // namespace annular

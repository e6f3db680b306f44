#include "annular/verify.hpp"

#include <functional>
#include <sstream>

#include "annular/config.hpp"
#include "annular/mc.hpp"
#include "annular/noncrossing.hpp"
#include "annular/pperm.hpp"
#include "annular/quotient.hpp"

namespace annular {

bool Report::ok() const
{
    for (auto& c : checks)
        if (!c.pass)
            return false;
    return true;
}

nlohmann::json Report::to_json() const
{
    nlohmann::json arr = nlohmann::json::array();
    for (auto& c : checks)
        arr.push_back({{"name", c.name}, {"pass", c.pass}, {"cases", c.cases}, {"detail", c.detail}});
    return {{"suite", suite}, {"ok", ok()}, {"checks", arr}};
}

std::string Report::text() const
{
    std::ostringstream os;
    for (auto& c : checks) {
        os << (c.pass ? "PASS " : "FAIL ") << c.name << " (" << c.cases << " cases)";
        if (!c.detail.empty())
            os << ": " << c.detail;
        os << "\n";
    }
    return os.str();
}

std::vector<Shape> compositions(int r, int min_m, int max_m, bool even_m_only)
{
    std::vector<Shape> out;
    std::vector<int> parts(r);
    for (int m = std::max(min_m, r); m <= max_m; ++m) {
        if (even_m_only && m % 2)
            continue;
        std::function<void(int, int)> gen = [&](int pos, int left) {
            if (pos == r - 1) {
                parts[pos] = left;
                out.emplace_back(parts);
                return;
            }
            for (int v = 1; v <= left - (r - 1 - pos); ++v) {
                parts[pos] = v;
                gen(pos + 1, left - v);
            }
        };
        gen(0, m);
    }
    return out;
}

namespace {

struct Tally {
    CheckResult r;
    explicit Tally(std::string name) { r.name = std::move(name); }
    void check(bool ok, const std::function<std::string()>& why)
    {
        ++r.cases;
        if (!ok && r.pass) {
            r.pass = false;
            r.detail = why();
        }
    }
};

std::string counts_str(const LimitCounts& c)
{
    return c.to_json().dump();
}

bool all_even(const Shape& s)
{
    for (int p : s.parts())
        if (p % 2)
            return false;
    return true;
}

} // namespace

Report verify_identities(int max_closed, int max_enum)
{
    Report rep;
    rep.suite = "identities";
    auto closed_shapes = compositions(3, 3, max_closed, true);
    auto enum_shapes = compositions(3, 3, max_enum, true);
    auto fam = [](const Shape& s, PSFamily f, bool closed) {
        return closed ? family_count_closed(s, f).value() : family_count_enumerated(s, f);
    };

    for (bool closed : {true, false}) {
        Tally t(closed ? "R = 0, closed forms" : "R = 0, enumerated families");
        for (auto& s : closed ? closed_shapes : enum_shapes) {
            if (!all_even(s))
                continue;
            std::int64_t r = 12 * fam(s, PSFamily::NC2_111, closed) + 4 * fam(s, PSFamily::NC2_211, closed) -
                             fam(s, PSFamily::NC2_11_2through, closed);
            t.check(r == 0, [&] { return "shape " + s.str() + ": R = " + std::to_string(r); });
        }
        rep.checks.push_back(t.r);
    }

    {
        Tally t("family closed forms match enumeration");
        for (auto& s : enum_shapes)
            for (auto f : {PSFamily::NC2_111, PSFamily::NC2_211, PSFamily::NC2_11, PSFamily::NC2_11_2through,
                           PSFamily::NC2_11_t, PSFamily::NC211_111}) {
                auto c = family_count_closed(s, f).value();
                auto e = family_count_enumerated(s, f);
                t.check(c == e, [&] {
                    return family_name(f) + " on " + s.str() + ": closed " + std::to_string(c) + ", enumerated " +
                           std::to_string(e);
                });
            }
        rep.checks.push_back(t.r);
    }

    for (bool closed : {true, false}) {
        Tally t(closed ? "|NC2_11_t| = |NC211_111|, closed forms" : "|NC2_11_t| = |NC211_111|, enumerated");
        for (auto& s : closed ? closed_shapes : enum_shapes) {
            auto a = fam(s, PSFamily::NC2_11_t, closed), b = fam(s, PSFamily::NC211_111, closed);
            t.check(a == b, [&] { return s.str() + ": " + std::to_string(a) + " vs " + std::to_string(b); });
        }
        rep.checks.push_back(t.r);
    }

    {
        Tally te("|NC2^(2)(m1,m2)| = (m1 m2/2)|NC2(m1)||NC2(m2)|, enumerated");
        Tally tc("|NC2^(2)(m1,m2)| = (m1 m2/2)|NC2(m1)||NC2(m2)|, against the general through-string count");
        for (auto& s : compositions(2, 2, max_closed, true)) {
            int m1 = s.part(0), m2 = s.part(1);
            std::int64_t want = (m1 % 2 || m2 % 2) ? 0 : checked_mul(checked_mul(m1 * m2 / 2, nc2_count(m1)), nc2_count(m2));
            if (s.m() <= max_enum) {
                auto e = count(AnnularClass::nc2_through(m1, m2, 2));
                te.check(e == want, [&] { return s.str() + ": " + std::to_string(e) + " vs " + std::to_string(want); });
            }
            std::int64_t general = (m1 % 2 || m2 % 2) ? 0 : 2 * binomial(m1, m1 / 2 - 1) * binomial(m2, m2 / 2 - 1);
            tc.check(general == want,
                     [&] { return s.str() + ": " + std::to_string(general) + " vs " + std::to_string(want); });
        }
        rep.checks.push_back(te.r);
        rep.checks.push_back(tc.r);
    }

    Tally all("|NC2(m1,m2,m3)| = |LG| + |UL24| + |T26|");
    Tally db("limit-graph counts: enumeration = closed forms (incl. DB)");
    Tally fib("pairing fibers: T26 2, UL24 2, T244 1, UC24 1, DB 1, onto all limit graphs");
    for (auto& s : enum_shapes) {
        auto en = count_limit_graphs_enumerated(s);
        auto cl = count_limit_graphs_closed(s);
        auto nc2 = count(AnnularClass::nc2(s));
        auto sum = en.total() + en[LimitKind::UL24] + en[LimitKind::T26];
        all.check(nc2 == sum, [&] { return s.str() + ": |NC2| = " + std::to_string(nc2) + ", sum " + std::to_string(sum); });
        db.check(en == cl, [&] { return s.str() + ": enumerated " + counts_str(en) + ", closed " + counts_str(cl); });
        auto f = pairing_fibers(s);
        bool ok = f.non_limit_images == 0 && f.images == en;
        const int want[5] = {2, 1, 2, 1, 1};
        for (int k = 0; k < 5; ++k)
            for (auto& [size, n] : f.fiber_sizes[k])
                ok = ok && size == want[k];
        fib.check(ok, [&] {
            return s.str() + ": images " + counts_str(f.images) + ", non-limit " + std::to_string(f.non_limit_images);
        });
    }
    rep.checks.push_back(all.r);
    rep.checks.push_back(db.r);
    rep.checks.push_back(fib.r);
    return rep;
}

namespace {

SetPartition random_partition(int m, std::mt19937_64& rng, bool near_limit)
{
    int k;
    if (near_limit) {
        int lo = std::max(1, (m - 1) / 2 - 1), hi = std::min(m, m / 2 + 1);
        k = lo + static_cast<int>(rng() % (hi - lo + 1));
    } else
        k = 1 + static_cast<int>(rng() % m);
    std::vector<int> lab(m);
    for (auto& x : lab)
        x = static_cast<int>(rng() % k);
    return SetPartition::from_labels(lab);
}

} // namespace

Report verify_parity(int max_m, int samples, std::uint64_t seed)
{
    Report rep;
    rep.suite = "parity";
    Tally cut("cutting classes: both orientations equally often on every cycle");
    Tally deg("in-degree = out-degree at every vertex, per cycle");
    Tally circ("unicircuit graphs: odd count from a cycle on one circuit class means odd on all");
    Tally lim("classified limit partitions have q = -1");
    Tally bound("connected singleton-free pi-bar: q <= -1, or q = -1/2 with one (1,1,1) loop of multiplicity 3");

    std::uint64_t stream = 0;
    for (int r = 1; r <= 3; ++r)
        for (auto& s : compositions(r, 1, max_m)) {
            auto rng = sample_stream(seed, stream++);
            auto g = build(s);
            for (int n = 0; n < samples; ++n) {
                auto pi = random_partition(s.m(), rng, n % 2 == 1);
                auto qg = quotient(g, pi);
                auto el = elementarize(qg);
                auto where = [&] { return "shape " + s.str() + ", pi = " + pi.str(); };

                for (auto& c : el.classes)
                    if (c.cutting)
                        cut.check(c.balanced() && c.multiplicity() % 2 == 0, where);

                bool dok = true;
                for (auto& v : degree_profile(qg))
                    for (auto& d : v)
                        dok = dok && d.rdg == d.ldg;
                deg.check(dok, where);

                if (el.connected && el.excess() == 0) {
                    auto cc = circuit_classes(el);
                    bool ok = true;
                    for (int j = 0; j < s.r(); ++j) {
                        int odd = 0;
                        for (int c : cc)
                            odd += el.classes[c].per_cycle[j] % 2;
                        ok = ok && (odd == 0 || odd == static_cast<int>(cc.size()));
                    }
                    circ.check(ok, where);
                }

                if (r != 3)
                    continue;
                auto lc = classify(qg);
                if (lc.is_limit())
                    lim.check(lc.q.q_twice() == -2, where);
                if (lc.reason == NotLimitReason::Disconnected || lc.reason == NotLimitReason::SingletonBlock)
                    continue;
                int qt = lc.q.q_twice();
                bool ok = qt <= -2;
                if (qt == -1) {
                    int threes = 0;
                    bool loop111 = false;
                    for (auto& c : el.classes)
                        if (c.multiplicity() == 3) {
                            ++threes;
                            loop111 = c.loop && c.per_cycle == std::vector<int>{1, 1, 1};
                        }
                    ok = threes == 1 && loop111;
                }
                bound.check(ok, [&] { return where() + ", q = " + lc.q.str(); });
            }
        }
    rep.checks = {cut.r, deg.r, circ.r, lim.r, bound.r};
    return rep;
}

namespace {

Poly entry_cumulant(bool diagonal, int forward, int backward)
{
    int n = forward + backward;
    if (diagonal) {
        switch (n) {
        case 1: return {};
        case 2: return Poly(1);
        case 3: return {};
        case 4: return Poly::symbol("kdiag4");
        default: return Poly::symbol("kdiag" + std::to_string(n));
        }
    }
    if (forward != backward)
        return {};
    switch (forward) {
    case 1: return Poly(1);
    case 2: return Poly::symbol("k4");
    case 3: return Poly::symbol("k6");
    default: return Poly::symbol("k" + std::to_string(n));
    }
}

} // namespace

Poly brute_weight(const Shape& shape, const SetPartition& pi)
{
    auto qg = quotient(build(shape), pi);
    int m = shape.m();
    // edges grouped by the matrix entry they read
    std::map<std::pair<int, int>, std::vector<int>> entry;
    for (int e = 0; e < m; ++e)
        entry[{std::min(qg.src[e], qg.tgt[e]), std::max(qg.src[e], qg.tgt[e])}].push_back(e);
    std::vector<std::pair<std::pair<int, int>, std::vector<int>>> groups(entry.begin(), entry.end());

    Permutation gamma = shape.gamma();
    std::vector<int> label(m);
    Poly total;
    int next = 0;
    std::function<void(std::size_t, Poly)> rec = [&](std::size_t g, Poly acc) {
        if (acc.is_zero())
            return;
        if (g == groups.size()) {
            // sigma v gamma = 1
            std::vector<int> par(m);
            for (int i = 0; i < m; ++i)
                par[i] = i;
            std::function<int(int)> find = [&](int x) { return par[x] == x ? x : par[x] = find(par[x]); };
            int comps = m;
            auto unite = [&](int a, int b) {
                a = find(a);
                b = find(b);
                if (a != b) {
                    par[a] = b;
                    --comps;
                }
            };
            std::map<int, int> first;
            for (int i = 0; i < m; ++i) {
                unite(i, gamma(i));
                auto [it, fresh] = first.try_emplace(label[i], i);
                if (!fresh)
                    unite(i, it->second);
            }
            if (comps == 1)
                total += acc;
            return;
        }
        const auto& [ends, edges] = groups[g];
        bool diagonal = ends.first == ends.second;
        int n = static_cast<int>(edges.size());
        // every set partition of this group's edges, as restricted growth strings
        std::vector<int> rgs(n, 0);
        std::function<void(int, int)> part = [&](int pos, int used) {
            if (pos == n) {
                Poly w = acc;
                for (int b = 0; b < used && !w.is_zero(); ++b) {
                    int fwd = 0, bwd = 0;
                    for (int k = 0; k < n; ++k)
                        if (rgs[k] == b)
                            (qg.src[edges[k]] == ends.first ? fwd : bwd)++;
                    w *= entry_cumulant(diagonal, fwd, bwd);
                }
                int base = next;
                for (int k = 0; k < n; ++k)
                    label[edges[k]] = base + rgs[k];
                next += used;
                rec(g + 1, w);
                next = base;
                return;
            }
            for (int c = 0; c <= used; ++c) {
                rgs[pos] = c;
                part(pos + 1, std::max(used, c + 1));
            }
        };
        part(0, 0);
    };
    rec(0, Poly(1));
    return total;
}

Report verify_oracle(int max_m)
{
    Report rep;
    rep.suite = "oracle";
    Tally img("every pairing image is a limit partition; images = enumerated limit graphs");
    Tally w("limit weight = brute-force cumulant expansion on every pi with m/2 - 1 blocks");
    Tally zero("brute-force expansion vanishes whenever q > -1");
    for (auto& s : compositions(3, 3, max_m)) {
        int m = s.m();
        check_bound(m, "oracle sweep over P(" + std::to_string(m) + ")");
        auto g = build(s);
        if (m % 2 == 0) {
            auto f = pairing_fibers(s);
            auto en = count_limit_graphs_enumerated(s);
            img.check(f.non_limit_images == 0 && f.images == en,
                      [&] { return s.str() + ": images " + counts_str(f.images) + ", enumerated " + counts_str(en); });
            sweep_partitions(m, m / 2 - 1, 1, [&](int, const std::vector<int>& lab) {
                auto pi = SetPartition::from_labels(lab);
                auto c = classify(quotient(g, pi));
                Poly want = c.is_limit() ? weight(c) : Poly();
                Poly got = brute_weight(s, pi);
                w.check(got == want, [&] {
                    return s.str() + " " + pi.str() + ": " + c.str() + " weight " + want.str() + ", expansion " +
                           got.str();
                });
            });
        }
        // q = #pi - m/2 > -1
        for (int b = 1; b <= m; ++b)
            if (2 * b > m - 2)
                sweep_partitions(m, b, 1, [&](int, const std::vector<int>& lab) {
                    auto pi = SetPartition::from_labels(lab);
                    auto got = brute_weight(s, pi);
                    zero.check(got.is_zero(), [&] { return s.str() + " " + pi.str() + ": " + got.str(); });
                });
    }
    rep.checks = {img.r, w.r, zero.r};
    return rep;
}

} // namespace annular

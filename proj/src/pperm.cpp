#include "annular/pperm.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "annular/config.hpp"
#include "annular/noncrossing.hpp"

namespace annular {

PartitionedPermutation::PartitionedPermutation(SetPartition v_, Permutation p_) : v(std::move(v_)), p(std::move(p_))
{
    if (!leq_perm_part(p, v))
        throw std::invalid_argument("partitioned permutation needs every cycle inside a block");
}

std::string PartitionedPermutation::str() const
{
    return "(" + v.str() + "," + p.str() + ")";
}

nlohmann::json PartitionedPermutation::to_json() const
{
    return {{"pi", p.str()}, {"v", v.str()}};
}

PartitionedPermutation PartitionedPermutation::from_json(const nlohmann::json& j)
{
    auto v = SetPartition::parse(j.at("v").get<std::string>());
    auto p = Permutation::parse(j.at("pi").get<std::string>(), v.size());
    return {v, p};
}

int pp_length(const PartitionedPermutation& pp)
{
    return pp.length();
}

GammaGraph gamma_forest(const SetPartition& v, const Permutation& p, const Permutation& gamma)
{
    if (v.size() != p.size() || p.size() != gamma.size())
        throw std::invalid_argument("gamma_forest: size mismatch");
    if (!leq_perm_part(p, v))
        throw std::invalid_argument("gamma_forest: cycles of p must refine v");
    GammaGraph g;
    auto white = join(cycles(p), cycles(gamma));
    g.black = v.block_count();
    g.white = white.block_count();
    int nv = g.black + g.white;
    std::vector<int> par(nv);
    std::iota(par.begin(), par.end(), 0);
    auto find = [&](int x) {
        while (par[x] != x)
            x = par[x] = par[par[x]];
        return x;
    };
    g.is_forest = true;
    g.components = nv;
    for (const auto& c : p.cycles()) {
        int a = v.block_of(c[0]);
        int b = g.black + white.block_of(c[0]);
        g.edges.emplace_back(a, b);
        int ra = find(a), rb = find(b);
        if (ra == rb)
            g.is_forest = false;
        else {
            par[ra] = rb;
            --g.components;
        }
    }
    return g;
}

GammaGraph gamma_forest(const SetPartition& v, const Permutation& p, const Shape& shape)
{
    return gamma_forest(v, p, shape.gamma());
}

bool pp_leq(const PartitionedPermutation& a, const PartitionedPermutation& b)
{
    if (a.p.size() != b.p.size())
        throw std::invalid_argument("pp_leq: size mismatch");
    if (!leq(a.v, b.v))
        return false;
    if (!gamma_forest(a.v, a.p, b.p).is_forest)
        return false;
    return is_planar_relative(a.p, b.p);
}

bool in_ps_nc(const PartitionedPermutation& pp, const Shape& shape)
{
    auto g = shape.gamma();
    PartitionedPermutation top(SetPartition::one(shape.m()), g);
    return pp_leq(pp, top) && join(pp.v, cycles(g)).block_count() == 1;
}

std::string family_name(PSFamily f)
{
    switch (f) {
    case PSFamily::SNC: return "SNC";
    case PSFamily::F111: return "F111";
    case PSFamily::F211: return "F211";
    case PSFamily::F11: return "F11";
    case PSFamily::NC2_111: return "NC2_111";
    case PSFamily::NC2_211: return "NC2_211";
    case PSFamily::NC2_11: return "NC2_11";
    case PSFamily::NC2_11_2through: return "NC2_11_2through";
    case PSFamily::NC2_11_t: return "NC2_11_t";
    case PSFamily::NC211_111: return "NC211_111";
    }
    return "?";
}

PSFamily family_from_name(const std::string& s)
{
    for (auto f : {PSFamily::SNC, PSFamily::F111, PSFamily::F211, PSFamily::F11, PSFamily::NC2_111,
                   PSFamily::NC2_211, PSFamily::NC2_11, PSFamily::NC2_11_2through, PSFamily::NC2_11_t,
                   PSFamily::NC211_111})
        if (family_name(f) == s)
            return f;
    throw std::invalid_argument("unknown family " + s);
}

bool is_pairing_family(PSFamily f)
{
    switch (f) {
    case PSFamily::SNC:
    case PSFamily::F111:
    case PSFamily::F211:
    case PSFamily::F11:
        return false;
    default:
        return true;
    }
}

namespace {

// A permutation on a sub-annulus, already written with global labels.
struct Piece {
    std::vector<std::pair<int, int>> arrows;  // (x, p(x)) on global labels
    std::vector<std::vector<int>> cyc;        // global cycles
    int through = 0;
    int through_rep = -1;                     // smallest point of the lone through string
};

std::vector<Piece> pieces(const Shape& shape, const std::vector<int>& circles, const PlanarSearch& opts)
{
    std::vector<int> parts;
    std::vector<int> to_global;
    for (int c : circles) {
        parts.push_back(shape.part(c));
        for (int k = 0; k < shape.part(c); ++k)
            to_global.push_back(shape.start(c) + k);
    }
    Shape local(parts);
    std::vector<Piece> out;
    bool pairing = opts.max_cycle == 2 && opts.singletons == 0;
    if (pairing && local.m() % 2)
        return out;
    for_each_planar(local, opts, [&](const Permutation& p) {
        Piece pc;
        for (int i = 0; i < p.size(); ++i)
            pc.arrows.emplace_back(to_global[i], to_global[p(i)]);
        for (auto& c : p.cycles()) {
            for (int& x : c)
                x = to_global[x];
            pc.cyc.push_back(std::move(c));
        }
        if (pairing && local.r() == 2) {
            for (int i = 0; i < p.size(); ++i)
                if (i < p(i) && local.circle_of(i) != local.circle_of(p(i))) {
                    if (pc.through == 0)
                        pc.through_rep = to_global[i];
                    ++pc.through;
                }
        }
        out.push_back(std::move(pc));
    });
    return out;
}

PlanarSearch nc_opts(int max_cycle)
{
    PlanarSearch o;
    o.max_cycle = max_cycle;
    return o;
}

PlanarSearch nc2_opts()
{
    PlanarSearch o;
    o.max_cycle = 2;
    o.singletons = 0;
    return o;
}

PlanarSearch nc211_opts()
{
    PlanarSearch o;
    o.max_cycle = 2;
    o.singletons = 1;
    return o;
}

// Assemble (V, pi) from pieces and groups of cycles to merge; each merged
// cycle is named by any of its points.
PSItem assemble(int m, const std::vector<const Piece*>& parts, const std::vector<std::vector<int>>& merges,
                PSFamily fam, std::array<int, 3> circles)
{
    std::vector<int> img(m, -1);
    for (const Piece* pc : parts)
        for (auto [x, y] : pc->arrows)
            img[x] = y;
    Permutation p(img);
    std::vector<int> lab(m);
    for (int i = 0; i < m; ++i)
        lab[i] = i;
    // label each point by the smallest point of its cycle
    for (const Piece* pc : parts)
        for (const auto& c : pc->cyc) {
            int lo = *std::min_element(c.begin(), c.end());
            for (int x : c)
                lab[x] = lo;
        }
    for (const auto& group : merges) {
        int target = lab[group[0]];
        for (std::size_t g = 1; g < group.size(); ++g) {
            int from = lab[group[g]];
            for (int& l : lab)
                if (l == from)
                    l = target;
        }
    }
    PSItem item;
    item.pp = PartitionedPermutation(SetPartition::from_labels(lab), p);
    item.family = fam;
    item.circles = circles;
    return item;
}

void sort_items(std::vector<PSItem>& items)
{
    std::vector<std::pair<std::pair<std::string, std::string>, std::size_t>> keyed;
    keyed.reserve(items.size());
    for (std::size_t i = 0; i < items.size(); ++i)
        keyed.push_back({{items[i].pp.p.str(), items[i].pp.v.str()}, i});
    std::sort(keyed.begin(), keyed.end());
    std::vector<PSItem> out;
    out.reserve(items.size());
    for (auto& kv : keyed)
        out.push_back(std::move(items[kv.second]));
    items = std::move(out);
}

void add_connected(const Shape& shape, int max_cycle, std::vector<PSItem>& out)
{
    std::vector<int> all(shape.r());
    std::iota(all.begin(), all.end(), 0);
    auto ps = pieces(shape, all, nc_opts(max_cycle));
    for (const auto& pc : ps)
        out.push_back(assemble(shape.m(), {&pc}, {}, PSFamily::SNC, {0, 1, 2}));
}

// V joins one cycle of `a` with one cycle of `b`
void add_single_join(const Shape& shape, const std::vector<Piece>& as, const std::vector<Piece>& bs, PSFamily fam,
                     std::array<int, 3> circles, bool through_only, std::vector<PSItem>& out)
{
    for (const auto& a : as)
        for (const auto& b : bs)
            for (const auto& ca : a.cyc) {
                if (through_only && std::find(ca.begin(), ca.end(), a.through_rep) == ca.end())
                    continue;
                for (const auto& cb : b.cyc)
                    out.push_back(assemble(shape.m(), {&a, &b}, {{ca[0], cb[0]}}, fam, circles));
            }
}

void add_f11(const Shape& shape, PSFamily fam, int max_cycle, std::vector<PSItem>& out)
{
    for (int lone = 2; lone >= 0; --lone) {
        std::vector<int> pair;
        for (int c = 0; c < 3; ++c)
            if (c != lone)
                pair.push_back(c);
        std::vector<Piece> annulus, disc;
        bool through_only = false;
        if (fam == PSFamily::F11) {
            annulus = pieces(shape, pair, nc_opts(max_cycle));
            disc = pieces(shape, {lone}, nc_opts(max_cycle));
        } else {
            annulus = pieces(shape, pair, nc2_opts());
            disc = pieces(shape, {lone}, nc2_opts());
            int want = fam == PSFamily::NC2_11_2through ? 2 : fam == PSFamily::NC2_11_t ? 1 : -1;
            if (want > 0)
                std::erase_if(annulus, [&](const Piece& p) { return p.through != want; });
            through_only = fam == PSFamily::NC2_11_t;
        }
        add_single_join(shape, annulus, disc, fam, {pair[0], pair[1], lone}, through_only, out);
    }
}

void add_triple(const Shape& shape, PSFamily fam, int max_cycle, std::vector<PSItem>& out)
{
    bool pairing = fam == PSFamily::NC2_111 || fam == PSFamily::NC2_211;
    std::array<std::vector<Piece>, 3> disc;
    for (int c = 0; c < 3; ++c)
        disc[c] = pieces(shape, {c}, pairing ? nc2_opts() : nc_opts(max_cycle));
    int m = shape.m();
    if (fam == PSFamily::F111 || fam == PSFamily::NC2_111) {
        for (const auto& a : disc[0])
            for (const auto& b : disc[1])
                for (const auto& c : disc[2])
                    for (const auto& x : a.cyc)
                        for (const auto& y : b.cyc)
                            for (const auto& z : c.cyc)
                                out.push_back(assemble(m, {&a, &b, &c}, {{x[0], y[0], z[0]}}, fam, {0, 1, 2}));
        return;
    }
    // F211 / NC2_211: path i1 - center - i3
    for (int center = 0; center < 3; ++center) {
        std::vector<int> ends;
        for (int c = 0; c < 3; ++c)
            if (c != center)
                ends.push_back(c);
        for (const auto& a : disc[ends[0]])
            for (const auto& b : disc[center])
                for (const auto& c : disc[ends[1]])
                    for (const auto& x : a.cyc)
                        for (std::size_t y1 = 0; y1 < b.cyc.size(); ++y1)
                            for (std::size_t y2 = 0; y2 < b.cyc.size(); ++y2) {
                                if (y1 == y2)
                                    continue;
                                for (const auto& z : c.cyc)
                                    out.push_back(assemble(m, {&a, &b, &c},
                                                           {{x[0], b.cyc[y1][0]}, {b.cyc[y2][0], z[0]}}, fam,
                                                           {ends[0], center, ends[1]}));
                            }
    }
}

void add_nc211(const Shape& shape, std::vector<PSItem>& out)
{
    int m = shape.m();
    for (int even = 0; even < 3; ++even) {
        std::vector<int> odd;
        for (int c = 0; c < 3; ++c)
            if (c != even)
                odd.push_back(c);
        auto pe = pieces(shape, {even}, nc2_opts());
        auto p1 = pieces(shape, {odd[0]}, nc211_opts());
        auto p2 = pieces(shape, {odd[1]}, nc211_opts());
        auto singleton = [](const Piece& pc) {
            for (const auto& c : pc.cyc)
                if (c.size() == 1)
                    return c[0];
            return -1;
        };
        for (const auto& a : p1)
            for (const auto& b : p2)
                for (const auto& c : pe)
                    for (const auto& z : c.cyc)
                        out.push_back(assemble(m, {&a, &b, &c}, {{singleton(a), singleton(b), z[0]}},
                                               PSFamily::NC211_111, {odd[0], odd[1], even}));
    }
}

void require_r3(const Shape& shape, PSFamily f)
{
    if (shape.r() != 3)
        throw std::invalid_argument("family " + family_name(f) + " needs three circles");
}

} // namespace

std::vector<PSItem> enumerate_family(const Shape& shape, PSFamily f, int max_cycle)
{
    require_r3(shape, f);
    check_bound(shape.m(), "PS_NC family " + family_name(f));
    std::vector<PSItem> out;
    switch (f) {
    case PSFamily::SNC:
        add_connected(shape, max_cycle, out);
        break;
    case PSFamily::F11:
    case PSFamily::NC2_11:
    case PSFamily::NC2_11_2through:
    case PSFamily::NC2_11_t:
        add_f11(shape, f, max_cycle, out);
        break;
    case PSFamily::F111:
    case PSFamily::F211:
    case PSFamily::NC2_111:
    case PSFamily::NC2_211:
        add_triple(shape, f, max_cycle, out);
        break;
    case PSFamily::NC211_111:
        add_nc211(shape, out);
        break;
    }
    sort_items(out);
    return out;
}

std::vector<PSItem> enumerate_ps_nc(const Shape& shape, int max_cycle)
{
    check_bound(shape.m(), "PS_NC(" + shape.str() + ")");
    std::vector<PSItem> out;
    if (shape.r() == 1) {
        add_connected(shape, max_cycle, out);
    } else if (shape.r() == 2) {
        add_connected(shape, max_cycle, out);
        auto a = pieces(shape, {0}, nc_opts(max_cycle));
        auto b = pieces(shape, {1}, nc_opts(max_cycle));
        add_single_join(shape, a, b, PSFamily::F11, {0, 1, -1}, false, out);
    } else if (shape.r() == 3) {
        for (auto f : {PSFamily::SNC, PSFamily::F11, PSFamily::F211, PSFamily::F111}) {
            auto part = enumerate_family(shape, f, max_cycle);
            std::move(part.begin(), part.end(), std::back_inserter(out));
        }
    } else {
        throw std::invalid_argument("PS_NC is implemented for at most three circles");
    }
    sort_items(out);
    return out;
}

std::int64_t family_count_enumerated(const Shape& shape, PSFamily f)
{
    return static_cast<std::int64_t>(enumerate_family(shape, f).size());
}

std::optional<std::int64_t> family_count_closed(const Shape& shape, PSFamily f)
{
    require_r3(shape, f);
    int m1 = shape.part(0), m2 = shape.part(1), m3 = shape.part(2), m = shape.m();
    auto all_even = m1 % 2 == 0 && m2 % 2 == 0 && m3 % 2 == 0;
    auto cat3 = [&] { return checked_mul(checked_mul(nc2_count(m1), nc2_count(m2)), nc2_count(m3)); };
    switch (f) {
    case PSFamily::NC2_111:
        if (!all_even)
            return 0;
        return checked_mul(std::int64_t(m1 / 2) * (m2 / 2) * (m3 / 2), cat3());
    case PSFamily::NC2_211:
        if (!all_even)
            return 0;
        return checked_mul(checked_mul(std::int64_t(m1 / 2) * (m2 / 2) * (m3 / 2), m / 2 - 3), cat3());
    case PSFamily::NC2_11_2through:
        if (!all_even)
            return 0;
        return checked_mul(std::int64_t(m) * m1 * m2 * m3 / 4, cat3());
    case PSFamily::NC211_111:
    case PSFamily::NC2_11_t: {
        int evens = (m1 % 2 == 0) + (m2 % 2 == 0) + (m3 % 2 == 0);
        if (evens != 1)
            return 0;
        int e = m1 % 2 == 0 ? m1 : m2 % 2 == 0 ? m2 : m3;
        std::vector<int> o;
        for (int x : {m1, m2, m3})
            if (x % 2)
                o.push_back(x);
        if (f == PSFamily::NC211_111)
            return checked_mul(checked_mul(checked_mul(std::int64_t(e) / 2 * o[0] * o[1], nc2_count(e)),
                                           nc2_count(o[0] - 1)),
                               nc2_count(o[1] - 1));
        auto through1 = count_closed(AnnularClass::nc2_through(o[0], o[1], 1)).value();
        return checked_mul(checked_mul(through1, nc2_count(e)), e / 2);
    }
    case PSFamily::NC2_11: {
        std::int64_t total = 0;
        for (int lone = 0; lone < 3; ++lone) {
            std::vector<int> pr;
            for (int c = 0; c < 3; ++c)
                if (c != lone)
                    pr.push_back(shape.part(c));
            int c3 = shape.part(lone);
            if ((pr[0] + pr[1]) % 2 || c3 % 2)
                continue;
            auto annulus = count_closed(AnnularClass::nc2(Shape({pr[0], pr[1]}))).value();
            total += checked_mul(checked_mul(annulus, nc2_count(c3)), std::int64_t(pr[0] + pr[1]) / 2 * (c3 / 2));
        }
        return total;
    }
    default:
        return std::nullopt;
    }
}

std::int64_t family_count(const Shape& shape, PSFamily f)
{
    if (auto c = family_count_closed(shape, f))
        return *c;
    return family_count_enumerated(shape, f);
}

} // namespace annular

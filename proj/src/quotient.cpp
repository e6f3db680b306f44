#include "annular/quotient.hpp"

#include <algorithm>
#include <bit>
#include <exception>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "annular/config.hpp"
#include "annular/noncrossing.hpp"
#include "annular/pperm.hpp"

namespace annular {

AnnulusGraph build(const Shape& shape)
{
    AnnulusGraph g;
    g.shape = shape;
    auto gamma = shape.gamma();
    int m = shape.m();
    g.src.resize(m);
    g.tgt.resize(m);
    g.cycle.resize(m);
    for (int i = 0; i < m; ++i) {
        g.src[i] = gamma(i);
        g.tgt[i] = i;
        g.cycle[i] = shape.circle_of(i);
    }
    return g;
}

QuotientGraph quotient(const AnnulusGraph& g, const SetPartition& pi)
{
    if (pi.size() != g.m())
        throw std::invalid_argument("quotient: partition has " + std::to_string(pi.size()) + " points, graph has " +
                                    std::to_string(g.m()));
    QuotientGraph q;
    q.base = g;
    q.pi = pi;
    q.src.resize(g.m());
    q.tgt.resize(g.m());
    for (int i = 0; i < g.m(); ++i) {
        q.src[i] = pi.block_of(g.src[i]);
        q.tgt[i] = pi.block_of(g.tgt[i]);
    }
    return q;
}

int EdgeClass::cycles_touched() const
{
    int c = 0;
    for (int x : per_cycle)
        c += x > 0;
    return c;
}

bool EdgeClass::balanced() const
{
    for (std::size_t j = 0; j < per_cycle.size(); ++j)
        if (2 * forward[j] != per_cycle[j])
            return false;
    return true;
}

namespace {

struct UnionFind {
    std::vector<int> par;
    explicit UnionFind(int n) : par(n) { std::iota(par.begin(), par.end(), 0); }
    int find(int x)
    {
        while (par[x] != x)
            x = par[x] = par[par[x]];
        return x;
    }
    bool unite(int a, int b)
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        par[a] = b;
        return true;
    }
};

// components among `vertices` using every class except `skip`
int components(const Elementarization& el, int nblocks, int skip)
{
    UnionFind uf(nblocks);
    int comps = static_cast<int>(el.vertices.size());
    for (int c = 0; c < static_cast<int>(el.classes.size()); ++c)
        if (c != skip && uf.unite(el.classes[c].a, el.classes[c].b))
            --comps;
    return comps;
}

} // namespace

Elementarization elementarize(const QuotientGraph& qg, unsigned cycle_mask)
{
    const auto& base = qg.base;
    int m = base.m(), r = base.shape.r();
    int nb = qg.vertex_count();
    Elementarization el;
    el.m = m;
    el.r = r;
    el.class_of.assign(m, -1);
    std::vector<int> slot(static_cast<std::size_t>(nb) * nb, -1);
    std::vector<char> seen(nb, 0);
    for (int i = 0; i < m; ++i) {
        if (!(cycle_mask >> base.cycle[i] & 1u))
            continue;
        int s = qg.src[i], t = qg.tgt[i];
        for (int v : {s, t})
            if (!seen[v]) {
                seen[v] = 1;
                el.vertices.push_back(v);
            }
        int a = std::min(s, t), b = std::max(s, t);
        int& id = slot[static_cast<std::size_t>(a) * nb + b];
        if (id < 0) {
            id = static_cast<int>(el.classes.size());
            EdgeClass c;
            c.a = a;
            c.b = b;
            c.loop = a == b;
            c.per_cycle.assign(r, 0);
            c.forward.assign(r, 0);
            el.classes.push_back(std::move(c));
        }
        auto& c = el.classes[id];
        c.edges.push_back(i);
        c.per_cycle[base.cycle[i]]++;
        if (s == a)
            c.forward[base.cycle[i]]++;
        el.class_of[i] = id;
    }
    std::sort(el.vertices.begin(), el.vertices.end());
    el.connected = components(el, nb, -1) == 1;
    int base_comps = components(el, nb, -1);
    for (int c = 0; c < static_cast<int>(el.classes.size()); ++c)
        if (!el.classes[c].loop)
            el.classes[c].cutting = components(el, nb, c) > base_comps;
    return el;
}

Elementarization elementarize(const QuotientGraph& qg)
{
    return elementarize(qg, ~0u);
}

SetPartition Elementarization::pibar() const
{
    for (int c : class_of)
        if (c < 0)
            throw std::logic_error("pibar of a restricted elementarization");
    return SetPartition::from_labels(class_of);
}

std::vector<int> circuit_classes(const Elementarization& el)
{
    int nmax = 0;
    for (int v : el.vertices)
        nmax = std::max(nmax, v + 1);
    std::vector<int> deg(nmax, 0);
    std::vector<std::vector<int>> inc(nmax);
    for (int c = 0; c < static_cast<int>(el.classes.size()); ++c) {
        const auto& e = el.classes[c];
        deg[e.a]++;
        deg[e.b]++;
        inc[e.a].push_back(c);
        if (!e.loop)
            inc[e.b].push_back(c);
    }
    std::vector<char> gone(el.classes.size(), 0);
    std::vector<int> stack;
    for (int v : el.vertices)
        if (deg[v] == 1)
            stack.push_back(v);
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (deg[v] != 1)
            continue;
        for (int c : inc[v]) {
            if (gone[c])
                continue;
            gone[c] = 1;
            const auto& e = el.classes[c];
            int w = e.a == v ? e.b : e.a;
            deg[v]--;
            deg[w]--;
            if (deg[w] == 1)
                stack.push_back(w);
            break;
        }
    }
    std::vector<int> out;
    for (int c = 0; c < static_cast<int>(el.classes.size()); ++c)
        if (!gone[c])
            out.push_back(c);
    return out;
}

std::string QVec::str() const
{
    std::string q2 = q2_twice % 2 ? std::to_string(q2_twice) + "/2" : std::to_string(q2_twice / 2);
    return "(" + std::to_string(q1) + "," + q2 + ")";
}

QVec q_vec(const Shape& shape, const SetPartition& pi)
{
    auto qg = quotient(build(shape), pi);
    auto el = elementarize(qg);
    QVec q;
    int nbar = static_cast<int>(el.classes.size());
    q.q1 = pi.block_count() - nbar;
    q.q2_twice = 2 * nbar - shape.m();
    return q;
}

std::vector<std::vector<VertexDegree>> degree_profile(const QuotientGraph& qg)
{
    int r = qg.base.shape.r();
    std::vector<std::vector<VertexDegree>> out(qg.vertex_count(), std::vector<VertexDegree>(r));
    for (int i = 0; i < qg.base.m(); ++i) {
        int j = qg.base.cycle[i];
        out[qg.tgt[i]][j].rdg++;
        out[qg.src[i]][j].ldg++;
    }
    return out;
}

namespace {

// every class of multiplicity 2; non-loops carry one edge each way
bool all_double(const Elementarization& sub)
{
    for (const auto& c : sub.classes) {
        if (c.multiplicity() != 2)
            return false;
        if (!c.loop) {
            int fwd = 0;
            for (int x : c.forward)
                fwd += x;
            if (fwd != 1)
                return false;
        }
    }
    return true;
}

} // namespace

bool is_double_tree(const Elementarization& sub)
{
    return sub.connected && sub.excess() == 1 && all_double(sub);
}

bool is_double_uniloop(const Elementarization& sub)
{
    if (!sub.connected || sub.excess() != 0 || !all_double(sub))
        return false;
    auto circ = circuit_classes(sub);
    return circ.size() == 1 && sub.classes[circ[0]].loop;
}

bool is_double_unicircuit(const Elementarization& sub, int j, int k)
{
    if (!sub.connected || sub.excess() != 0 || !all_double(sub))
        return false;
    for (int c : circuit_classes(sub)) {
        const auto& e = sub.classes[c];
        if (e.per_cycle[j] != 1 || e.per_cycle[k] != 1)
            return false;
    }
    return true;
}

std::string kind_name(LimitKind k)
{
    switch (k) {
    case LimitKind::T26: return "T26";
    case LimitKind::T244: return "T244";
    case LimitKind::UL24: return "UL24";
    case LimitKind::UC24: return "UC24";
    case LimitKind::DB: return "DB";
    case LimitKind::NotLimit: return "NotLimit";
    }
    return "?";
}

std::string reason_name(NotLimitReason r)
{
    switch (r) {
    case NotLimitReason::None: return "none";
    case NotLimitReason::Disconnected: return "disconnected";
    case NotLimitReason::SingletonBlock: return "singleton-block";
    case NotLimitReason::QTooLarge: return "q-too-large";
    case NotLimitReason::QSubleading: return "q-subleading";
    case NotLimitReason::OrientationMismatch: return "orientation-mismatch";
    case NotLimitReason::OddMultiplicity: return "odd-multiplicity";
    case NotLimitReason::CircuitNonconnecting: return "circuit-nonconnecting";
    case NotLimitReason::Unrecognized: return "unrecognized";
    }
    return "?";
}

std::string LimitClass::str() const
{
    if (is_limit())
        return kind_name(kind);
    return "NotLimit(" + reason_name(reason) + ")";
}

namespace {

LimitClass not_limit(NotLimitReason r, QVec q)
{
    return {LimitKind::NotLimit, r, q};
}

LimitClass limit(LimitKind k, QVec q)
{
    return {k, NotLimitReason::None, q};
}

} // namespace

LimitClass classify(const QuotientGraph& qg)
{
    const Shape& shape = qg.base.shape;
    if (shape.r() != 3)
        throw std::invalid_argument("classify: limit graphs are defined for three circles");
    int m = shape.m();
    auto el = elementarize(qg);
    QVec q;
    int nbar = static_cast<int>(el.classes.size());
    q.q1 = qg.vertex_count() - nbar;
    q.q2_twice = 2 * nbar - m;

    // pi-bar v gamma = 1_m: classes joined along the circles
    {
        UnionFind uf(3);
        int comps = 3;
        for (const auto& c : el.classes) {
            int first = -1;
            for (int j = 0; j < 3; ++j)
                if (c.per_cycle[j]) {
                    if (first < 0)
                        first = j;
                    else if (uf.unite(first, j))
                        --comps;
                }
        }
        if (comps != 1)
            return not_limit(NotLimitReason::Disconnected, q);
    }
    for (const auto& c : el.classes)
        if (c.multiplicity() == 1)
            return not_limit(NotLimitReason::SingletonBlock, q);
    if (q.q_twice() > -2)
        return not_limit(NotLimitReason::QTooLarge, q);
    if (q.q_twice() < -2)
        return not_limit(NotLimitReason::QSubleading, q);
    for (const auto& c : el.classes)
        if (c.multiplicity() == 2 && !c.loop) {
            int fwd = c.forward[0] + c.forward[1] + c.forward[2];
            if (fwd != 1)
                return not_limit(NotLimitReason::OrientationMismatch, q);
        }
    for (const auto& c : el.classes)
        if (c.multiplicity() % 2)
            return not_limit(NotLimitReason::OddMultiplicity, q);

    std::vector<int> big;
    for (int c = 0; c < nbar; ++c)
        if (el.classes[c].multiplicity() > 2)
            big.push_back(c);

    auto single = [&](int j) { return elementarize(qg, 1u << j); };
    auto pair = [&](int j, int k) { return elementarize(qg, (1u << j) | (1u << k)); };
    auto all_trees = [&] {
        for (int j = 0; j < 3; ++j)
            if (!is_double_tree(single(j)))
                return false;
        return true;
    };

    if (q.q1 == 1) {
        if (big.size() == 1) {
            const auto& c = el.classes[big[0]];
            if (c.multiplicity() == 6 && c.per_cycle == std::vector<int>{2, 2, 2} && all_trees())
                return limit(LimitKind::T26, q);
        } else if (big.size() == 2) {
            const auto& c1 = el.classes[big[0]];
            const auto& c2 = el.classes[big[1]];
            auto pair_of = [](const EdgeClass& c) {
                unsigned mask = 0;
                for (int j = 0; j < 3; ++j) {
                    if (c.per_cycle[j] != 0 && c.per_cycle[j] != 2)
                        return 0u;
                    if (c.per_cycle[j] == 2)
                        mask |= 1u << j;
                }
                return mask;
            };
            unsigned p1 = pair_of(c1), p2 = pair_of(c2);
            if (c1.multiplicity() == 4 && c2.multiplicity() == 4 && std::popcount(p1) == 2 &&
                std::popcount(p2) == 2 && p1 != p2 && all_trees())
                return limit(LimitKind::T244, q);
        }
        return not_limit(NotLimitReason::Unrecognized, q);
    }

    if (q.q1 == 0) {
        if (big.size() != 1 || el.classes[big[0]].multiplicity() != 4)
            return not_limit(NotLimitReason::Unrecognized, q);
        const auto& four = el.classes[big[0]];
        if (four.loop) {
            for (int i = 0; i < 3; ++i) {
                int j = (i + 1) % 3, k = (i + 2) % 3;
                if (four.per_cycle[i] != 2 || four.per_cycle[j] != 1 || four.per_cycle[k] != 1)
                    continue;
                if (shape.part(i) % 2 != 0 || shape.part(j) % 2 != 1 || shape.part(k) % 2 != 1)
                    continue;
                if (!is_double_uniloop(single(i)))
                    continue;
                auto jk = pair(std::min(j, k), std::max(j, k));
                if (!is_double_unicircuit(jk, j, k))
                    continue;
                auto circ = circuit_classes(jk);
                if (circ.size() == 1 && jk.classes[circ[0]].loop && jk.classes[circ[0]].a == four.a)
                    return limit(LimitKind::UL24, q);
            }
        }
        for (int i = 0; i < 3; ++i) {
            int j = (i + 1) % 3, k = (i + 2) % 3;
            if (four.per_cycle[i] != 2 || four.per_cycle[j] + four.per_cycle[k] != 2)
                continue;
            if (!is_double_tree(single(i)))
                continue;
            if (is_double_unicircuit(pair(std::min(j, k), std::max(j, k)), j, k))
                return limit(LimitKind::UC24, q);
        }
        return not_limit(NotLimitReason::CircuitNonconnecting, q);
    }

    if (q.q1 == -1 && big.empty())
        return limit(LimitKind::DB, q);
    return not_limit(NotLimitReason::Unrecognized, q);
}

LimitClass classify(const Shape& shape, const SetPartition& pi)
{
    return classify(quotient(build(shape), pi));
}

Poly weight(LimitKind kind)
{
    auto k4 = Poly::symbol("k4"), k6 = Poly::symbol("k6"), kd4 = Poly::symbol("kdiag4");
    switch (kind) {
    case LimitKind::T26: return k6 + k4.scaled(6) + Poly(2);
    case LimitKind::T244: return (k4 + Poly(1)).pow(2);
    case LimitKind::UL24: return kd4 + Poly(2);
    case LimitKind::UC24: return k4 + Poly(1);
    case LimitKind::DB: return Poly(1);
    case LimitKind::NotLimit: break;
    }
    throw std::invalid_argument("weight: not a limit class");
}

Poly weight(const LimitClass& c)
{
    return weight(c.kind);
}

SetPartition pairing_to_partition(const Shape& shape, const Permutation& sigma)
{
    if (sigma.size() != shape.m())
        throw std::invalid_argument("pairing_to_partition: size mismatch");
    auto gamma = shape.gamma();
    if (!sigma.is_pairing() || !is_planar_relative(sigma, gamma) || join_block_count(sigma, gamma) != 1)
        throw std::invalid_argument("pairing_to_partition: " + sigma.str() + " is not in NC2(" + shape.str() + ")");
    return cycles(compose(gamma, sigma));
}

nlohmann::json LimitCounts::to_json() const
{
    nlohmann::json j = nlohmann::json::object();
    for (auto k : kLimitKinds)
        j[kind_name(k)] = (*this)[k];
    return j;
}

void sweep_partitions(int m, int blocks, int threads,
                      const std::function<void(int worker, const std::vector<int>& labels)>& fn)
{
    if (m <= 0) {
        if (blocks <= 0)
            fn(0, {});
        return;
    }
    auto feasible = [&](int pos, int used) {
        if (blocks < 0)
            return true;
        return used <= blocks && used + (m - pos) >= blocks;
    };
    int plen = std::min(m, 7);
    std::vector<std::vector<int>> prefixes;
    {
        std::vector<int> lab(plen);
        std::function<void(int, int)> gen = [&](int pos, int used) {
            if (!feasible(pos, used))
                return;
            if (pos == plen) {
                prefixes.push_back(lab);
                return;
            }
            for (int c = 0; c <= used; ++c) {
                lab[pos] = c;
                gen(pos + 1, std::max(used, c + 1));
            }
        };
        gen(0, 0);
    }
    threads = std::max(1, std::min<int>(threads, static_cast<int>(prefixes.size())));
    auto work = [&](int w) {
        std::vector<int> lab(m);
        std::function<void(int, int)> ext = [&](int pos, int used) {
            if (!feasible(pos, used))
                return;
            if (pos == m) {
                fn(w, lab);
                return;
            }
            for (int c = 0; c <= used; ++c) {
                lab[pos] = c;
                ext(pos + 1, std::max(used, c + 1));
            }
        };
        for (std::size_t p = w; p < prefixes.size(); p += threads) {
            std::copy(prefixes[p].begin(), prefixes[p].end(), lab.begin());
            int used = 1 + *std::max_element(prefixes[p].begin(), prefixes[p].end());
            ext(plen, used);
        }
    };
    if (threads == 1) {
        work(0);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errs(threads);
    for (int w = 0; w < threads; ++w)
        pool.emplace_back([&, w] {
            try {
                work(w);
            } catch (...) {
                errs[w] = std::current_exception();
            }
        });
    for (auto& t : pool)
        t.join();
    for (auto& e : errs)
        if (e)
            std::rethrow_exception(e);
}

LimitCounts count_limit_graphs_enumerated(const Shape& shape)
{
    if (shape.r() != 3)
        throw std::invalid_argument("count_limit_graphs: needs three circles");
    check_bound(shape.m(), "limit graph sweep over P(" + std::to_string(shape.m()) + ")");
    LimitCounts out;
    if (shape.m() % 2)
        return out;
    int threads = worker_threads();
    std::vector<LimitCounts> part(threads);
    auto g = build(shape);
    sweep_partitions(shape.m(), shape.m() / 2 - 1, threads, [&](int w, const std::vector<int>& lab) {
        auto c = classify(quotient(g, SetPartition::from_labels(lab)));
        if (c.is_limit())
            part[w][c.kind]++;
    });
    for (auto& p : part)
        for (int k = 0; k < 5; ++k)
            out.n[k] += p.n[k];
    return out;
}

LimitCounts count_limit_graphs_closed(const Shape& shape)
{
    if (shape.r() != 3)
        throw std::invalid_argument("count_limit_graphs: needs three circles");
    LimitCounts out;
    if (shape.m() % 2)
        return out;
    auto fc = [&](PSFamily f) { return family_count(shape, f); };
    out[LimitKind::T26] = 4 * fc(PSFamily::NC2_111);
    out[LimitKind::T244] = 4 * fc(PSFamily::NC2_211);
    out[LimitKind::UL24] = fc(PSFamily::NC211_111);
    out[LimitKind::UC24] = 2 * (fc(PSFamily::NC2_11) - fc(PSFamily::NC2_11_2through) - fc(PSFamily::NC2_11_t));
    std::int64_t all = count(AnnularClass::nc2(shape));
    out[LimitKind::DB] = all - out[LimitKind::UC24] - out[LimitKind::T244] - 2 * out[LimitKind::UL24] -
                         2 * out[LimitKind::T26];
    return out;
}

FiberReport pairing_fibers(const Shape& shape)
{
    if (shape.r() != 3)
        throw std::invalid_argument("pairing_fibers: needs three circles");
    FiberReport rep;
    std::map<std::vector<int>, std::pair<LimitKind, int>> seen;
    auto g = build(shape);
    for (const auto& sigma : enumerate(AnnularClass::nc2(shape))) {
        ++rep.pairings;
        auto pi = pairing_to_partition(shape, sigma);
        auto [it, fresh] = seen.try_emplace(pi.labels(), LimitKind::NotLimit, 0);
        if (fresh)
            it->second.first = classify(quotient(g, pi)).kind;
        it->second.second++;
    }
    for (auto& [lab, kv] : seen) {
        if (kv.first == LimitKind::NotLimit) {
            ++rep.non_limit_images;
            continue;
        }
        rep.images[kv.first]++;
        rep.fiber_sizes[static_cast<int>(kv.first)][kv.second]++;
    }
    return rep;
}

std::int64_t count_double_structures(const Shape& shape, DoubleStructure kind, int circuit_length)
{
    int want_r = kind == DoubleStructure::Unicircuit ? 2 : 1;
    if (shape.r() != want_r)
        throw std::invalid_argument("count_double_structures: wrong number of circles");
    int m = shape.m();
    check_bound(m, "double structure sweep over P(" + std::to_string(m) + ")");
    if (m % 2)
        return 0;
    int blocks = kind == DoubleStructure::Tree ? m / 2 + 1 : m / 2;
    auto g = build(shape);
    int threads = worker_threads();
    std::vector<std::int64_t> part(threads, 0);
    sweep_partitions(m, blocks, threads, [&](int w, const std::vector<int>& lab) {
        auto el = elementarize(quotient(g, SetPartition::from_labels(lab)));
        bool ok = false;
        switch (kind) {
        case DoubleStructure::Tree:
            ok = is_double_tree(el);
            break;
        case DoubleStructure::Uniloop:
            ok = is_double_uniloop(el);
            break;
        case DoubleStructure::Unicircuit:
            ok = is_double_unicircuit(el, 0, 1) &&
                 (circuit_length == 0 || static_cast<int>(circuit_classes(el).size()) == circuit_length);
            break;
        }
        part[w] += ok;
    });
    return std::accumulate(part.begin(), part.end(), std::int64_t{0});
}

std::optional<std::int64_t> count_double_structures_closed(const Shape& shape, DoubleStructure kind,
                                                           int circuit_length)
{
    int m = shape.m();
    switch (kind) {
    case DoubleStructure::Tree:
        if (shape.r() != 1)
            return std::nullopt;
        return nc2_count(m);
    case DoubleStructure::Uniloop:
        if (shape.r() != 1)
            return std::nullopt;
        return checked_mul(m / 2, nc2_count(m));
    case DoubleStructure::Unicircuit: {
        if (shape.r() != 2)
            return std::nullopt;
        int m1 = shape.part(0), m2 = shape.part(1);
        if (circuit_length == 2)
            return 0;
        if (circuit_length > 0)
            return count_closed(AnnularClass::nc2_through(m1, m2, circuit_length));
        auto all = count_closed(AnnularClass::nc2(shape));
        auto two = count_closed(AnnularClass::nc2_through(m1, m2, 2));
        if (!all || !two)
            return std::nullopt;
        return *all - *two;
    }
    }
    return std::nullopt;
}

namespace {

const char* cycle_colour(int j)
{
    static const char* colours[] = {"black", "blue", "red", "darkgreen", "orange", "purple"};
    return colours[j % 6];
}

std::string block_label(const SetPartition& pi, int b)
{
    std::string s = "{";
    for (std::size_t k = 0; k < pi.blocks()[b].size(); ++k)
        s += (k ? "," : "") + std::to_string(pi.blocks()[b][k] + 1);
    return s + "}";
}

} // namespace

std::string to_dot(const QuotientGraph& qg)
{
    std::ostringstream os;
    os << "digraph T {\n";
    for (int b = 0; b < qg.vertex_count(); ++b)
        os << "  v" << b << " [label=\"" << block_label(qg.pi, b) << "\"];\n";
    for (int i = 0; i < qg.base.m(); ++i)
        os << "  v" << qg.src[i] << " -> v" << qg.tgt[i] << " [label=\"e" << i + 1 << "\", color="
           << cycle_colour(qg.base.cycle[i]) << "];\n";
    os << "}\n";
    return os.str();
}

std::string to_dot(const QuotientGraph& qg, const Elementarization& el)
{
    std::ostringstream os;
    os << "graph Tbar {\n";
    for (int v : el.vertices)
        os << "  v" << v << " [label=\"" << block_label(qg.pi, v) << "\"];\n";
    for (const auto& c : el.classes) {
        std::string lab;
        for (int e : c.edges)
            lab += (lab.empty() ? "" : ",") + std::to_string(e + 1);
        int j = 0;
        while (j < el.r && c.per_cycle[j] == 0)
            ++j;
        os << "  v" << c.a << " -- v" << c.b << " [label=\"" << lab << "\", color=" << cycle_colour(j)
           << (c.cycles_touched() > 1 ? ", style=bold" : "") << "];\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace annular

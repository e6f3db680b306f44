#include "annular/moments.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "annular/noncrossing.hpp"
#include "annular/quotient.hpp"

namespace annular {

Key make_key(std::vector<int> args)
{
    if (args.empty() || args.size() > 3)
        throw std::invalid_argument("index tuples have order 1 to 3");
    for (int a : args)
        if (a < 1)
            throw std::invalid_argument("indices must be positive");
    std::sort(args.begin(), args.end());
    return args;
}

std::string key_str(const Key& k)
{
    std::string s;
    for (std::size_t i = 0; i < k.size(); ++i)
        s += (i ? "," : "") + std::to_string(k[i]);
    return s;
}

std::string index_symbol(const std::string& prefix, const Key& k)
{
    std::string s = prefix;
    for (int x : k)
        s += "_" + std::to_string(x);
    return s;
}

void IndexedTable::set(std::vector<int> args, Poly value)
{
    values_[make_key(std::move(args))] = std::move(value);
}

bool IndexedTable::contains(std::vector<int> args) const
{
    return values_.count(make_key(std::move(args))) > 0;
}

Poly IndexedTable::get(std::vector<int> args) const
{
    Key k = make_key(std::move(args));
    if (max_index > 0 && k.back() > max_index)
        return {};
    if (auto it = values_.find(k); it != values_.end())
        return it->second;
    switch (missing_) {
    case Missing::Zero: return {};
    case Missing::Symbol: return Poly::symbol(index_symbol(prefix_, k));
    case Missing::Error: break;
    }
    throw std::out_of_range("missing entry " + index_symbol(prefix_, k));
}

nlohmann::json IndexedTable::to_json() const
{
    nlohmann::json j = nlohmann::json::object();
    for (auto& [k, v] : values_)
        j[key_str(k)] = v.to_json();
    return j;
}

CumulantTable wigner_cumulants()
{
    CumulantTable t("kappa", IndexedTable::Missing::Zero);
    auto k4 = Poly::symbol("k4");
    t.set({2}, Poly(1));
    t.set({2, 2}, k4.scaled(2));
    t.set({2, 2, 2}, Poly::symbol("k6").scaled(4));
    t.set({1, 1, 2}, Poly::symbol("kdiag4") - k4.scaled(2));
    t.max_index = 2;
    return t;
}

Poly kappa_of(const PartitionedPermutation& pp, const CumulantTable& table)
{
    std::map<int, std::vector<int>> sizes;
    for (const auto& c : pp.p.cycles())
        sizes[pp.v.block_of(c[0])].push_back(static_cast<int>(c.size()));
    Poly out(1);
    for (auto& [b, s] : sizes) {
        out *= table.get(s);
        if (out.is_zero())
            break;
    }
    return out;
}

Poly alpha_from_cumulants(const std::vector<int>& args, const CumulantTable& table)
{
    if (args.empty() || args.size() > 3)
        throw std::invalid_argument("alpha_from_cumulants: order must be 1, 2 or 3");
    Poly sum;
    for (const auto& item : enumerate_ps_nc(Shape(args), table.max_index))
        sum += kappa_of(item.pp, table);
    return sum;
}

namespace {

std::vector<Key> keys_of(int order, int sum)
{
    std::vector<Key> out;
    Key k(order);
    std::function<void(int, int, int)> gen = [&](int pos, int lo, int left) {
        if (pos == order - 1) {
            if (left >= lo) {
                k[pos] = left;
                out.push_back(k);
            }
            return;
        }
        for (int v = lo; v * (order - pos) <= left; ++v) {
            k[pos] = v;
            gen(pos + 1, v, left - v);
        }
    };
    gen(0, 1, sum);
    return out;
}

} // namespace

CumulantTable cumulants_from_moments(const MomentTable& moments, int max_order, int max_sum)
{
    if (max_order < 1 || max_order > 3)
        throw std::invalid_argument("cumulants_from_moments: order must be 1, 2 or 3");
    const std::string kp = "kappa";
    auto formal = IndexedTable::symbolic(kp);
    CumulantTable out(kp, IndexedTable::Missing::Error);
    std::map<std::string, Poly> solved;

    for (int s = 1; s <= max_sum; ++s)
        for (int r = 1; r <= std::min(max_order, s); ++r) {
            auto group = keys_of(r, s);
            int n = static_cast<int>(group.size());
            std::map<std::string, int> col;
            for (int i = 0; i < n; ++i)
                col[index_symbol(kp, group[i])] = i;
            // alpha_K = sum_J A[K][J] kappa_J + (terms in already solved cumulants)
            std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n, 0));
            std::vector<Poly> rhs(n);
            for (int i = 0; i < n; ++i) {
                rhs[i] = moments.get(group[i]);
                auto expansion = alpha_from_cumulants(group[i], formal);
                for (auto& [mono, c] : expansion.terms()) {
                    if (mono.size() == 1 && mono.begin()->second == 1) {
                        if (auto it = col.find(mono.begin()->first); it != col.end()) {
                            a[i][it->second] += c;
                            continue;
                        }
                    }
                    Poly t(c);
                    for (auto& [sym, e] : mono) {
                        auto it = solved.find(sym);
                        if (it == solved.end())
                            throw std::logic_error("inversion order: " + sym + " needed before it is known");
                        t *= it->second.pow(e);
                    }
                    rhs[i] -= t;
                }
            }
            // exact Gauss-Jordan
            for (int c = 0; c < n; ++c) {
                int p = c;
                while (p < n && a[p][c] == 0)
                    ++p;
                if (p == n)
                    throw std::logic_error("singular moment-cumulant system at sum " + std::to_string(s));
                std::swap(a[p], a[c]);
                std::swap(rhs[p], rhs[c]);
                Rational inv = Rational(1) / a[c][c];
                for (int j = 0; j < n; ++j)
                    a[c][j] *= inv;
                rhs[c] = rhs[c].scaled(inv);
                for (int i = 0; i < n; ++i)
                    if (i != c && a[i][c] != 0) {
                        Rational f = a[i][c];
                        for (int j = 0; j < n; ++j)
                            a[i][j] -= f * a[c][j];
                        rhs[i] -= rhs[c].scaled(f);
                    }
            }
            for (int i = 0; i < n; ++i) {
                solved[index_symbol(kp, group[i])] = rhs[i];
                out.set(group[i], rhs[i]);
            }
        }
    return out;
}

Poly cumulant_from_moments(const std::vector<int>& args, const MomentTable& moments)
{
    Key k = make_key(args);
    int sum = 0;
    for (int x : k)
        sum += x;
    return cumulants_from_moments(moments, static_cast<int>(k.size()), sum).get(k);
}

std::int64_t alpha_first(int m)
{
    return nc2_count(m);
}

Poly alpha_second(int m1, int m2)
{
    if ((m1 + m2) % 2)
        return {};
    auto all = count_closed(AnnularClass::nc2(Shape({m1, m2}))).value();
    Rational c = Rational(m1 * m2, 4) * nc2_count(m1) * nc2_count(m2);
    return Poly(all) + Poly::symbol("k4").scaled(2 * c);
}

Poly alpha_third_closed(int m1, int m2, int m3)
{
    Shape s({m1, m2, m3});
    if (s.m() % 2)
        return {};
    auto fc = [&](PSFamily f) { return Poly(family_count(s, f)); };
    auto k4 = Poly::symbol("k4");
    return Poly(count(AnnularClass::nc2(s))) + Poly::symbol("k6").scaled(4) * fc(PSFamily::NC2_111) +
           k4.pow(2).scaled(4) * fc(PSFamily::NC2_211) + k4.scaled(2) * fc(PSFamily::NC2_11) +
           (Poly::symbol("kdiag4") - k4.scaled(2)) * fc(PSFamily::NC211_111);
}

Poly alpha_third_graphsum(int m1, int m2, int m3)
{
    auto counts = count_limit_graphs_enumerated(Shape({m1, m2, m3}));
    Poly out;
    for (auto k : kLimitKinds)
        out += weight(k).scaled(counts[k]);
    return out;
}

} // namespace annular

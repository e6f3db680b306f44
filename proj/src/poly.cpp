#include "annular/poly.hpp"

#include <cmath>
#include <stdexcept>

namespace annular {

Rational parse_rational(const std::string& s)
{
    auto bad = [&] { return std::invalid_argument("not a rational number: '" + s + "'"); };
    auto integer = [&](const std::string& t) {
        if (t.empty())
            throw bad();
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size())
            throw bad();
        for (std::size_t k = i; k < t.size(); ++k)
            if (t[k] < '0' || t[k] > '9')
                throw bad();
        return BigInt(t[0] == '+' ? t.substr(1) : t);
    };
    auto slash = s.find('/');
    if (slash == std::string::npos)
        return Rational(integer(s));
    BigInt den = integer(s.substr(slash + 1));
    if (den == 0)
        throw bad();
    return Rational(integer(s.substr(0, slash)), den);
}

std::string rational_str(const Rational& q)
{
    auto num = boost::multiprecision::numerator(q);
    auto den = boost::multiprecision::denominator(q);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

bool MonomialLess::operator()(const Monomial& a, const Monomial& b) const
{
    int da = 0, db = 0;
    for (auto& [s, e] : a)
        da += e;
    for (auto& [s, e] : b)
        db += e;
    if (da != db)
        return da < db;
    return a < b;
}

Poly::Poly(long long c) : Poly(Rational(c)) {}

Poly::Poly(const Rational& c)
{
    if (c != 0)
        terms_[{}] = c;
}

Poly Poly::symbol(const std::string& name, int exponent)
{
    if (name.empty())
        throw std::invalid_argument("empty symbol name");
    Poly p;
    if (exponent == 0)
        p.terms_[{}] = 1;
    else
        p.terms_[{{name, exponent}}] = 1;
    return p;
}

bool Poly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational Poly::constant() const
{
    return coeff({});
}

Rational Poly::coeff(const Monomial& mono) const
{
    auto it = terms_.find(mono);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Monomial& mono, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, fresh] = terms_.try_emplace(mono, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& o)
{
    for (auto& [m, c] : o.terms_)
        add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    for (auto& [m, c] : o.terms_)
        add_term(m, -c);
    return *this;
}

Poly& Poly::operator*=(const Poly& o)
{
    Poly out;
    for (auto& [ma, ca] : terms_)
        for (auto& [mb, cb] : o.terms_) {
            Monomial mono = ma;
            for (auto& [s, e] : mb)
                mono[s] += e;
            out.add_term(mono, ca * cb);
        }
    terms_ = std::move(out.terms_);
    return *this;
}

Poly Poly::operator-() const
{
    return scaled(-1);
}

Poly Poly::pow(int n) const
{
    if (n < 0)
        throw std::invalid_argument("negative power");
    Poly out(1), base = *this;
    while (n) {
        if (n & 1)
            out *= base;
        n >>= 1;
        if (n)
            base *= base;
    }
    return out;
}

Poly Poly::scaled(const Rational& c) const
{
    Poly out;
    for (auto& [m, v] : terms_)
        out.add_term(m, v * c);
    return out;
}

Poly Poly::substitute(const std::map<std::string, Poly>& values) const
{
    Poly out;
    for (auto& [mono, c] : terms_) {
        Poly term(c);
        Monomial rest;
        for (auto& [s, e] : mono) {
            auto it = values.find(s);
            if (it == values.end())
                rest[s] = e;
            else
                term *= it->second.pow(e);
        }
        Poly r;
        r.terms_[rest] = 1;
        out += term * r;
    }
    return out;
}

Rational Poly::evaluate(const std::map<std::string, Rational>& values) const
{
    Rational acc = 0;
    for (auto& [mono, c] : terms_) {
        Rational t = c;
        for (auto& [s, e] : mono) {
            auto it = values.find(s);
            if (it == values.end())
                throw std::invalid_argument("no value for symbol " + s);
            for (int k = 0; k < e; ++k)
                t *= it->second;
        }
        acc += t;
    }
    return acc;
}

double Poly::evaluate(const std::map<std::string, double>& values) const
{
    double acc = 0;
    for (auto& [mono, c] : terms_) {
        double t = c.convert_to<double>();
        for (auto& [s, e] : mono) {
            auto it = values.find(s);
            if (it == values.end())
                throw std::invalid_argument("no value for symbol " + s);
            t *= std::pow(it->second, e);
        }
        acc += t;
    }
    return acc;
}

std::string Poly::str() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (auto& [mono, c] : terms_) {
        Rational a = c < 0 ? Rational(-c) : c;
        if (first)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        first = false;
        std::string body;
        for (auto& [s, e] : mono) {
            if (!body.empty())
                body += "*";
            body += s;
            if (e != 1)
                body += "^" + std::to_string(e);
        }
        if (body.empty())
            out += rational_str(a);
        else if (a == 1)
            out += body;
        else
            out += rational_str(a) + "*" + body;
    }
    return out;
}

nlohmann::json Poly::to_json() const
{
    nlohmann::json terms = nlohmann::json::array();
    for (auto& [mono, c] : terms_) {
        nlohmann::json m = nlohmann::json::object();
        for (auto& [s, e] : mono)
            m[s] = e;
        terms.push_back({{"coeff", rational_str(c)}, {"mono", m}});
    }
    return {{"terms", terms}};
}

Poly Poly::from_json(const nlohmann::json& j)
{
    Poly p;
    for (auto& t : j.at("terms")) {
        Monomial mono;
        for (auto& [s, e] : t.at("mono").items()) {
            int ex = e.get<int>();
            if (ex < 0)
                throw std::invalid_argument("negative exponent in polynomial JSON");
            if (ex > 0)
                mono[s] = ex;
        }
        p.add_term(mono, parse_rational(t.at("coeff").get<std::string>()));
    }
    return p;
}

} // namespace annular

#pragma once

#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "json.hpp"

namespace annular {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// "3", "-2/5"
Rational parse_rational(const std::string& s);
std::string rational_str(const Rational& q);

// symbol -> positive exponent
using Monomial = std::map<std::string, int>;

// Canonical order: total degree first, then lexicographic on (symbol, exponent).
struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse multivariate polynomial with exact rational coefficients.
class Poly {
public:
    using Terms = std::map<Monomial, Rational, MonomialLess>;

    Poly() = default;
    Poly(long long c);
    Poly(const Rational& c);
    static Poly symbol(const std::string& name, int exponent = 1);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant() const;
    Rational coeff(const Monomial& mono) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    Poly operator-() const;
    Poly pow(int n) const;
    Poly scaled(const Rational& c) const;

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }

    // Substitutes symbols present in `values`; others stay symbolic.
    Poly substitute(const std::map<std::string, Poly>& values) const;
    Rational evaluate(const std::map<std::string, Rational>& values) const; // throws on a missing symbol
    double evaluate(const std::map<std::string, double>& values) const;

    // "1 + 12*k4 + 4*k6 - 2*k4*kdiag4 + k4^2"
    std::string str() const;
    nlohmann::json to_json() const;
    static Poly from_json(const nlohmann::json& j);

private:
    void add_term(const Monomial& mono, const Rational& c);
    Terms terms_;
};

} // namespace annular

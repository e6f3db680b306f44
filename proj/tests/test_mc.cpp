#include "doctest.h"

#include <cmath>
#include <complex>

#include "annular/config.hpp"
#include "annular/mc.hpp"

using namespace annular;

TEST_CASE("sampled matrices are Hermitian with a real diagonal")
{
    for (auto model : {EntryModel::gaussian(), EntryModel::phase_rademacher(Rational(1, 2), DiagonalLaw::Rademacher)}) {
        auto rng = sample_stream(3, 0);
        auto x = sample_matrix(model, 12, rng);
        CHECK(x == x.adjoint());
        for (int i = 0; i < 12; ++i)
            CHECK(x(i, i).imag() == 0.0);
    }
    auto rng = sample_stream(1, 1);
    CHECK_THROWS(sample_matrix(EntryModel::gaussian(), 0, rng));
}

TEST_CASE("phase-Rademacher entries have E x^2 = 0 and E|x|^2 = 1")
{
    auto model = EntryModel::phase_rademacher(Rational(1, 2));
    std::complex<double> sq = 0;
    double abs2 = 0;
    long n = 0;
    for (int s = 0; s < 200; ++s) {
        auto rng = sample_stream(11, s);
        auto x = sample_matrix(model, 20, rng) * std::sqrt(20.0);
        for (int i = 0; i < 20; ++i)
            for (int j = i + 1; j < 20; ++j) {
                sq += x(i, j) * x(i, j);
                abs2 += std::norm(x(i, j));
                ++n;
            }
    }
    // 38000 entries; |x|^2 has variance spread^2 = 1/4
    CHECK(std::abs(sq / double(n)) < 0.03);
    CHECK(abs2 / n == doctest::Approx(1.0).epsilon(0.02));
}

TEST_CASE("analytic entry cumulants")
{
    auto g = analytic_cumulants(EntryModel::gaussian());
    CHECK(g.k4 == 0);
    CHECK(g.k6 == 0);
    CHECK(g.kdiag4 == 0);
    auto pr = analytic_cumulants(EntryModel::phase_rademacher(0, DiagonalLaw::Rademacher));
    CHECK(pr.k4 == -1);
    CHECK(pr.k6 == 4);
    CHECK(pr.kdiag4 == -2);
    auto half = analytic_cumulants(EntryModel::phase_rademacher(Rational(1, 2)));
    CHECK(half.k4 == Rational(-3, 4));
    CHECK(half.k6 == Rational(5, 2));
    CHECK_THROWS(EntryModel::phase_rademacher(2).validate());
    CHECK_THROWS(EntryModel::parse("cauchy"));
    CHECK(EntryModel::parse("phase-rademacher", "rademacher", "1/2").spread == Rational(1, 2));
}

TEST_CASE("trace powers")
{
    auto rng = sample_stream(5, 0);
    auto x = sample_matrix(EntryModel::gaussian(), 9, rng);
    auto t = trace_powers(x, {1, 2, 3, 5, 6});
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Identity(9, 9);
    std::vector<double> direct;
    for (int k = 1; k <= 6; ++k) {
        p = p * x;
        direct.push_back(p.trace().real());
    }
    CHECK(t[0] == doctest::Approx(direct[0]));
    CHECK(t[1] == doctest::Approx(direct[1]));
    CHECK(t[2] == doctest::Approx(direct[2]));
    CHECK(t[3] == doctest::Approx(direct[4]).epsilon(1e-9));
    CHECK(t[4] == doctest::Approx(direct[5]).epsilon(1e-9));
}

TEST_CASE("k-statistics are unbiased textbook formulas")
{
    std::vector<double> a{1, 2, 4, 7}, b{0, 1, 1, 5};
    double n = 4, ma = 3.5, mb = 1.75;
    CHECK(k_statistic({a}) == doctest::Approx(ma));
    double cov = 0;
    for (int i = 0; i < 4; ++i)
        cov += (a[i] - ma) * (b[i] - mb);
    CHECK(k_statistic({a, b}) == doctest::Approx(cov / (n - 1)));
    double m3 = 0;
    for (int i = 0; i < 4; ++i)
        m3 += (a[i] - ma) * (a[i] - ma) * (b[i] - mb);
    CHECK(k_statistic({a, a, b}) == doctest::Approx(n * m3 / ((n - 1) * (n - 2))));
    CHECK_THROWS(k_statistic({a, {1.0}}));
}

TEST_CASE("estimates are reproducible and independent of the thread count")
{
    MCOptions o;
    o.n = 20;
    o.samples = 600;
    o.seed = 42;
    o.batches = 20;
    std::vector<std::vector<int>> shapes{{2}, {2, 2}, {2, 2, 2}};
    set_worker_threads(1);
    auto one = estimate_alphas(EntryModel::gaussian(), shapes, o);
    set_worker_threads(3);
    auto three = estimate_alphas(EntryModel::gaussian(), shapes, o);
    set_worker_threads(0);
    REQUIRE(one.size() == 3);
    for (int i = 0; i < 3; ++i) {
        CHECK(one[i].to_json().dump() == three[i].to_json().dump());
        CHECK(one[i].se > 0);
    }
    o.seed = 43;
    CHECK(estimate_alpha(EntryModel::gaussian(), {2}, o).estimate != one[0].estimate);
}

TEST_CASE("Gaussian second moment of the semicircle")
{
    MCOptions o;
    o.n = 60;
    o.samples = 2000;
    o.seed = 7;
    auto e = estimate_alpha(EntryModel::gaussian(), {2}, o);
    // E Tr(X^2)/N = 1 exactly for this model; the order one estimate is (1/N) E Tr X^2
    CHECK(std::abs(e.estimate - 1.0) < 4 * e.se);
    CHECK(theory_value(EntryModel::gaussian(), {2}) == 1.0);
    CHECK(theory_value(EntryModel::gaussian(), {2, 2}) == 2.0);
    CHECK(theory_alpha({2, 2, 2}) == Poly(8) + Poly::symbol("k4") * 24 + Poly::symbol("k6") * 4);
    CHECK_THROWS(estimate_alpha(EntryModel::gaussian(), {1, 1, 1, 1}, o));
}

#include "annular/mc.hpp"

#include <cmath>
#include <complex>
#include <exception>
#include <stdexcept>
#include <thread>

#include <Eigen/Eigenvalues>

#include "annular/config.hpp"
#include "annular/moments.hpp"

namespace annular {

EntryModel EntryModel::phase_rademacher(Rational spread, DiagonalLaw diag)
{
    EntryModel m;
    m.off = OffDiagonalLaw::PhaseRademacher;
    m.diag = diag;
    m.spread = spread;
    m.validate();
    return m;
}

EntryModel EntryModel::parse(const std::string& off, const std::string& diag, const std::string& spread)
{
    EntryModel m;
    if (off == "gaussian")
        m.off = OffDiagonalLaw::Gaussian;
    else if (off == "phase-rademacher")
        m.off = OffDiagonalLaw::PhaseRademacher;
    else
        throw std::invalid_argument("unknown model '" + off + "' (gaussian, phase-rademacher)");
    if (diag == "gaussian")
        m.diag = DiagonalLaw::Gaussian;
    else if (diag == "rademacher")
        m.diag = DiagonalLaw::Rademacher;
    else
        throw std::invalid_argument("unknown diagonal law '" + diag + "' (gaussian, rademacher)");
    m.spread = parse_rational(spread);
    if (m.off == OffDiagonalLaw::Gaussian && m.spread != 0)
        throw std::invalid_argument("--spread only applies to phase-rademacher");
    m.validate();
    return m;
}

void EntryModel::validate() const
{
    if (spread < 0 || spread > 1)
        throw std::invalid_argument("spread must lie in [0, 1]");
}

std::string EntryModel::name() const
{
    std::string s = off == OffDiagonalLaw::Gaussian ? "gaussian" : "phase-rademacher";
    if (off == OffDiagonalLaw::PhaseRademacher)
        s += "(spread=" + rational_str(spread) + ")";
    s += diag == DiagonalLaw::Gaussian ? "/diag=gaussian" : "/diag=rademacher";
    return s;
}

nlohmann::json EntryModel::to_json() const
{
    return {{"off_diagonal", off == OffDiagonalLaw::Gaussian ? "gaussian" : "phase-rademacher"},
            {"diagonal", diag == DiagonalLaw::Gaussian ? "gaussian" : "rademacher"},
            {"spread", rational_str(spread)}};
}

ModelCumulants analytic_cumulants(const EntryModel& model)
{
    model.validate();
    ModelCumulants c;
    if (model.off == OffDiagonalLaw::PhaseRademacher) {
        // E rho^4 = 1 + s^2, E rho^6 = 1 + 3 s^2; only balanced mixed cumulants survive
        Rational s2 = model.spread * model.spread;
        c.k4 = (1 + s2) - 2;
        c.k6 = (1 + 3 * s2) - 9 * (1 + s2) + 12;
    }
    c.kdiag4 = model.diag == DiagonalLaw::Rademacher ? Rational(-2) : Rational(0);
    return c;
}

std::mt19937_64 sample_stream(std::uint64_t seed, std::uint64_t index)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return std::mt19937_64(seq);
}

HermitianMatrix sample_matrix(const EntryModel& model, int n, std::mt19937_64& rng)
{
    if (n < 1)
        throw std::invalid_argument("matrix size must be positive");
    model.validate();
    std::normal_distribution<double> normal;
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    const double s = model.spread.convert_to<double>();
    const double r_hi = std::sqrt(1 + s), r_lo = std::sqrt(1 - s);
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    HermitianMatrix x(n, n);
    for (int i = 0; i < n; ++i) {
        double d = model.diag == DiagonalLaw::Gaussian ? normal(rng) : ((rng() & 1) ? 1.0 : -1.0);
        x(i, i) = d * scale;
        for (int j = i + 1; j < n; ++j) {
            std::complex<double> z;
            if (model.off == OffDiagonalLaw::Gaussian) {
                double a = normal(rng);
                double b = normal(rng);
                z = {a * inv_sqrt2, b * inv_sqrt2};
            } else {
                auto u = rng();
                double rho = (u & 4) ? r_hi : r_lo;
                switch (u & 3) {
                case 0: z = {rho, 0}; break;
                case 1: z = {0, rho}; break;
                case 2: z = {-rho, 0}; break;
                default: z = {0, -rho}; break;
                }
            }
            x(i, j) = z * scale;
            x(j, i) = std::conj(z) * scale;
        }
    }
    return x;
}

std::vector<double> trace_powers(const HermitianMatrix& x, const std::vector<int>& powers)
{
    int top = 0;
    for (int p : powers) {
        if (p < 1)
            throw std::invalid_argument("trace powers start at 1");
        top = std::max(top, p);
    }
    std::vector<double> out;
    out.reserve(powers.size());
    if (top > 4) {
        Eigen::SelfAdjointEigenSolver<HermitianMatrix> es(x, Eigen::EigenvaluesOnly);
        const auto& ev = es.eigenvalues();
        for (int p : powers) {
            double t = 0;
            for (Eigen::Index i = 0; i < ev.size(); ++i)
                t += std::pow(ev[i], p);
            out.push_back(t);
        }
        return out;
    }
    // Tr X^(a+b) = Re sum_ij (X^a)_ij conj((X^b)_ij) since X^b is Hermitian
    HermitianMatrix x2;
    if (top >= 3)
        x2 = x * x;
    for (int p : powers) {
        switch (p) {
        case 1: out.push_back(x.trace().real()); break;
        case 2: out.push_back(x.squaredNorm()); break;
        case 3: out.push_back((x2.array() * x.array().conjugate()).sum().real()); break;
        default: out.push_back(x2.squaredNorm()); break;
        }
    }
    return out;
}

namespace {

// power sums of centered columns, up to order 3
struct Sums {
    long double n = 0;
    long double s[3]{};
    long double p[3][3]{};
    long double t = 0;

    void add(const double* v, int r)
    {
        n += 1;
        for (int a = 0; a < r; ++a) {
            s[a] += v[a];
            for (int b = a; b < r; ++b)
                p[a][b] += static_cast<long double>(v[a]) * v[b];
        }
        if (r == 3)
            t += static_cast<long double>(v[0]) * v[1] * v[2];
    }
    Sums& operator+=(const Sums& o)
    {
        n += o.n;
        for (int a = 0; a < 3; ++a) {
            s[a] += o.s[a];
            for (int b = 0; b < 3; ++b)
                p[a][b] += o.p[a][b];
        }
        t += o.t;
        return *this;
    }
    Sums operator-(const Sums& o) const
    {
        Sums d = *this;
        d.n -= o.n;
        for (int a = 0; a < 3; ++a) {
            d.s[a] -= o.s[a];
            for (int b = 0; b < 3; ++b)
                d.p[a][b] -= o.p[a][b];
        }
        d.t -= o.t;
        return d;
    }

    long double kstat(int r) const
    {
        switch (r) {
        case 1: return s[0] / n;
        case 2: return (n * p[0][1] - s[0] * s[1]) / (n * (n - 1));
        default:
            return (n * n * t - n * (p[0][1] * s[2] + p[0][2] * s[1] + p[1][2] * s[0]) + 2 * s[0] * s[1] * s[2]) /
                   (n * (n - 1) * (n - 2));
        }
    }
};

// columns indexed [shape slot][sample]
MCEstimate reduce(const std::vector<int>& shape, const std::vector<std::vector<double>>& cols, const MCOptions& o)
{
    int r = static_cast<int>(shape.size());
    std::size_t n = cols[0].size();
    std::vector<double> mean(r);
    for (int a = 0; a < r; ++a) {
        long double acc = 0;
        for (double v : cols[a])
            acc += v;
        mean[a] = static_cast<double>(acc / n);
    }
    // order one keeps the mean; cumulants of order >= 2 are shift invariant
    if (r == 1)
        mean[0] = 0;
    std::vector<Sums> batch(o.batches);
    double v[3];
    for (int b = 0; b < o.batches; ++b) {
        std::size_t lo = n * b / o.batches, hi = n * (b + 1) / o.batches;
        for (std::size_t i = lo; i < hi; ++i) {
            for (int a = 0; a < r; ++a)
                v[a] = cols[a][i] - mean[a];
            batch[b].add(v, r);
        }
    }
    Sums total;
    for (auto& b : batch)
        total += b;
    const double scale = std::pow(static_cast<double>(o.n), r - 2);
    MCEstimate e;
    e.shape = shape;
    e.n = o.n;
    e.samples = static_cast<std::int64_t>(n);
    e.batches = o.batches;
    e.seed = o.seed;
    e.estimate = static_cast<double>(total.kstat(r)) * scale;
    // delete-one-batch jackknife
    std::vector<long double> loo(o.batches);
    long double avg = 0;
    for (int b = 0; b < o.batches; ++b) {
        loo[b] = (total - batch[b]).kstat(r);
        avg += loo[b];
    }
    avg /= o.batches;
    long double ss = 0;
    for (auto x : loo)
        ss += (x - avg) * (x - avg);
    e.se = static_cast<double>(std::sqrt(ss * (o.batches - 1) / o.batches)) * scale;
    if (!std::isfinite(e.estimate) || !std::isfinite(e.se) || e.se <= 0)
        throw std::domain_error("degenerate (zero-variance) input for shape " + key_str(shape));
    return e;
}

} // namespace

double k_statistic(const std::vector<std::vector<double>>& columns)
{
    int r = static_cast<int>(columns.size());
    if (r < 1 || r > 3)
        throw std::invalid_argument("k_statistic: order must be 1, 2 or 3");
    std::size_t n = columns[0].size();
    for (auto& c : columns)
        if (c.size() != n)
            throw std::invalid_argument("k_statistic: columns differ in length");
    if (n < static_cast<std::size_t>(r))
        throw std::invalid_argument("k_statistic: too few samples");
    Sums s;
    double v[3];
    for (std::size_t i = 0; i < n; ++i) {
        for (int a = 0; a < r; ++a)
            v[a] = columns[a][i];
        s.add(v, r);
    }
    return static_cast<double>(s.kstat(r));
}

std::vector<MCEstimate> estimate_alphas(const EntryModel& model, const std::vector<std::vector<int>>& shapes,
                                        const MCOptions& opts)
{
    model.validate();
    if (opts.n < 1)
        throw std::invalid_argument("N must be positive");
    if (opts.batches < 10)
        throw std::invalid_argument("at least 10 batches are needed");
    if (opts.samples < 3 * static_cast<std::int64_t>(opts.batches))
        throw std::invalid_argument("need at least 3 samples per batch");
    std::vector<int> powers;
    for (auto& sh : shapes) {
        if (sh.empty() || sh.size() > 3)
            throw std::invalid_argument("estimate_alpha: order must be 1, 2 or 3");
        for (int p : sh) {
            if (p < 1)
                throw std::invalid_argument("shape parts must be positive");
            if (std::find(powers.begin(), powers.end(), p) == powers.end())
                powers.push_back(p);
        }
    }
    std::sort(powers.begin(), powers.end());
    std::size_t n = static_cast<std::size_t>(opts.samples);
    std::vector<std::vector<double>> traces(powers.size(), std::vector<double>(n));

    int threads = std::max(1, std::min<int>(worker_threads(), static_cast<int>(n)));
    auto work = [&](int w) {
        for (std::size_t i = w; i < n; i += threads) {
            auto rng = sample_stream(opts.seed, i);
            auto t = trace_powers(sample_matrix(model, opts.n, rng), powers);
            for (std::size_t k = 0; k < powers.size(); ++k)
                traces[k][i] = t[k];
        }
    };
    if (threads == 1)
        work(0);
    else {
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

    std::vector<MCEstimate> out;
    for (auto& sh : shapes) {
        std::vector<std::vector<double>> cols;
        for (int p : sh)
            cols.push_back(traces[std::find(powers.begin(), powers.end(), p) - powers.begin()]);
        out.push_back(reduce(sh, cols, opts));
    }
    return out;
}

MCEstimate estimate_alpha(const EntryModel& model, const std::vector<int>& shape, const MCOptions& opts)
{
    return estimate_alphas(model, {shape}, opts).front();
}

nlohmann::json MCEstimate::to_json() const
{
    return {{"shape", shape}, {"N", n},     {"samples", samples}, {"batches", batches},
            {"seed", seed},   {"estimate", estimate}, {"se", se}};
}

Poly theory_alpha(const std::vector<int>& shape)
{
    switch (shape.size()) {
    case 1: return Poly(alpha_first(shape[0]));
    case 2: return alpha_second(shape[0], shape[1]);
    case 3: return alpha_third_closed(shape[0], shape[1], shape[2]);
    }
    throw std::invalid_argument("theory_alpha: order must be 1, 2 or 3");
}

double theory_value(const EntryModel& model, const std::vector<int>& shape)
{
    return theory_alpha(shape).evaluate(analytic_cumulants(model).values()).convert_to<double>();
}

} // namespace annular

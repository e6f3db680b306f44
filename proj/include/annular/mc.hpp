#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "annular/poly.hpp"
#include "json.hpp"

namespace annular {

enum class OffDiagonalLaw {
    Gaussian,        // (a + ib)/sqrt(2), a, b standard normal
    PhaseRademacher, // rho * w, w uniform on {1, i, -1, -i}, rho two-point
};
enum class DiagonalLaw { Gaussian, Rademacher };

struct EntryModel {
    OffDiagonalLaw off = OffDiagonalLaw::Gaussian;
    DiagonalLaw diag = DiagonalLaw::Gaussian;
    // phase-Rademacher radius: rho^2 = 1 +- spread with equal probability, 0 <= spread <= 1
    Rational spread = 0;

    static EntryModel gaussian() { return {}; }
    static EntryModel phase_rademacher(Rational spread = 0, DiagonalLaw diag = DiagonalLaw::Gaussian);
    // "gaussian", "phase-rademacher"; diag "gaussian" | "rademacher"
    static EntryModel parse(const std::string& off, const std::string& diag = "gaussian",
                            const std::string& spread = "0");
    void validate() const;
    std::string name() const;
    nlohmann::json to_json() const;
};

struct ModelCumulants {
    Rational k4, k6, kdiag4;
    std::map<std::string, Rational> values() const { return {{"k4", k4}, {"k6", k6}, {"kdiag4", kdiag4}}; }
};
ModelCumulants analytic_cumulants(const EntryModel& model);

using HermitianMatrix = Eigen::MatrixXcd;
HermitianMatrix sample_matrix(const EntryModel& model, int n, std::mt19937_64& rng);

// Generator for sample `index` of a run; independent of thread layout.
std::mt19937_64 sample_stream(std::uint64_t seed, std::uint64_t index);

// Tr X^p for each requested p (real, X Hermitian)
std::vector<double> trace_powers(const HermitianMatrix& x, const std::vector<int>& powers);

struct MCEstimate {
    std::vector<int> shape;
    int n = 0;
    std::int64_t samples = 0;
    int batches = 0;
    std::uint64_t seed = 0;
    double estimate = 0;
    double se = 0;
    nlohmann::json to_json() const;
};

struct MCOptions {
    int n = 100;                 // matrix size N
    std::int64_t samples = 1000;
    std::uint64_t seed = 1;
    int batches = 50;            // jackknife groups
};

// N^{r-2} k_r(Tr X^{m_1}, ..., Tr X^{m_r}) by k-statistics, r = shape.size() <= 3
MCEstimate estimate_alpha(const EntryModel& model, const std::vector<int>& shape, const MCOptions& opts);
// Several shapes from one sample set; every shape sees the same matrices.
std::vector<MCEstimate> estimate_alphas(const EntryModel& model, const std::vector<std::vector<int>>& shapes,
                                        const MCOptions& opts);

// Unbiased joint cumulant estimate (k-statistic) of order columns.size() in 1..3.
double k_statistic(const std::vector<std::vector<double>>& columns);

// Limit value predicted by the engine for this model.
Poly theory_alpha(const std::vector<int>& shape);
double theory_value(const EntryModel& model, const std::vector<int>& shape);

} // namespace annular

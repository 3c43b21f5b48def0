#ifndef RMAC_EXPERIMENTS_HPP
#define RMAC_EXPERIMENTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rmac/field.hpp"

namespace rmac {

/// Aggregate of a normalized statistic over seeded trials.
struct SampleStats {
    std::uint64_t trials = 0;
    double mean = 0.0;
    /// Unbiased; 0 for a single trial.
    double variance = 0.0;
    double std_err = 0.0;
};

/// Acceptance radius: this many standard errors, with an absolute floor for small cells.
inline constexpr double kAcceptanceSigmas = 4.0;
inline constexpr double kAcceptanceFloor = 0.05;

/// Work units are C(n,j) * trials * (simplices of one restricted complex).
inline constexpr double kWorkBudget = 5e9;

struct ExperimentOptions {
    unsigned workers = 0;
    bool override_budget = false;
};

/// Per-trial statistic of one cell: Y_t = sample_stream({n,d,p,seed}, t) and
/// value_t = sum over |J| = j of dim H~_{j-i-1}(Y_t restricted to J).
/// Results are indexed by trial and do not depend on the worker count.
/// Throws GuardError if the work budget is exceeded without override.
std::vector<std::uint64_t> bigraded_trial_sums(int d, int n, double p, int i, int j, std::uint64_t trials,
                                               std::uint64_t seed, const FieldSpec& field,
                                               const ExperimentOptions& options = {});

/// Stats of beta^{-i,2j}(Y) / C(n,j); aggregation is exact before rounding.
SampleStats estimate_bigraded(int d, int n, double p, int i, int j, std::uint64_t trials, std::uint64_t seed,
                              const FieldSpec& field, const ExperimentOptions& options = {});

struct ConvergenceConfig {
    int d = 1;
    int j = 3;
    int i = 2;
    std::vector<double> p_grid;
    std::vector<int> n_grid;
    std::uint64_t trials = 200;
    std::uint64_t seed = 0;
    FieldSpec field = FieldSpec::prime(2);

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;
};

struct ConvergenceRow {
    int d, j, i;
    double p;
    int n;
    std::uint64_t trials;
    double mean;
    double std_err;
    /// f_j(p) when i = j-d, g_j(p) when i = j-d-1.
    double limit;
    /// Mean over trials of |value_t - limit|.
    double abs_dev;
};

/// One row per (p, n) cell, p-major in grid order. Every cell reuses the master
/// seed, so cells differing only in p are coupled.
std::vector<ConvergenceRow> run_convergence(const ConvergenceConfig& config, const ExperimentOptions& options = {});

/// |mean - limit| <= max(3 std_err, floor), the per-cell convergence test.
bool within_convergence_band(const ConvergenceRow& row);

struct VarianceRow {
    int d, j, i;
    double p;
    int n;
    std::uint64_t trials;
    double mean;
    double variance;
    /// Zero variance: left out of the fit.
    bool excluded;
};

struct VarianceFit {
    double p;
    /// Least-squares slope of log(variance) against log(n); empty when refused.
    std::optional<double> slope;
    std::size_t points;
    std::string diagnostic;
};

struct VarianceScaling {
    std::vector<VarianceRow> rows;
    std::vector<VarianceFit> fits;
};

/// Requires at least three values in the n-grid.
VarianceScaling run_variance_scaling(const ConvergenceConfig& config, const ExperimentOptions& options = {});

struct CovarianceCheck {
    int d, j, i, m, n;
    double p;
    std::uint64_t trials;
    double covariance;
    double std_err;
    /// kAcceptanceSigmas * std_err
    double radius;
    /// Exact Cov from exact_cov_poly, when m >= d+1 and within the enumeration guard.
    std::optional<double> exact;

    /// Target is `exact` when present, otherwise 0.
    bool consistent() const;
};

/// Samples Y on n vertices and compares X_{J1}, X_{J2} for J1 = {1..j},
/// J2 = {j-m+1..2j-m}. Requires n >= 2j - m.
CovarianceCheck run_covariance_check(int d, int j, int i, int m, int n, double p, std::uint64_t trials,
                                     std::uint64_t seed, const FieldSpec& field,
                                     const ExperimentOptions& options = {});

} // namespace rmac

#endif

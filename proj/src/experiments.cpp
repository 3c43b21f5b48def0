#include "rmac/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <gmpxx.h>

#include "parallel.hpp"
#include "rmac/combinatorics.hpp"
#include "rmac/complex.hpp"
#include "rmac/errors.hpp"
#include "rmac/limit_polys.hpp"
#include "rmac/sampler.hpp"

namespace rmac {

namespace {

void check_cell(int d, int n, double p, int i, int j, std::uint64_t trials)
{
    LMParams{n, d, p, 0}.validate();
    if (j < 1 || j > n)
        throw std::invalid_argument("j must lie in 1..n");
    homology_degree(d, j, i);
    if (trials < 1)
        throw std::invalid_argument("trials must be at least 1");
}

void check_budget(double work, bool override_budget)
{
    if (!override_budget && work > kWorkBudget) {
        std::ostringstream os;
        os << "estimated work " << work << " exceeds the budget of " << kWorkBudget
           << "; reduce trials or n, or override the budget";
        throw GuardError(os.str());
    }
}

struct ExactMoments {
    mpz_class sum = 0;
    mpz_class sum_squares = 0;
};

ExactMoments moments(const std::vector<std::uint64_t>& values)
{
    ExactMoments m;
    for (std::uint64_t v : values) {
        mpz_class x(static_cast<unsigned long>(v));
        m.sum += x;
        m.sum_squares += x * x;
    }
    return m;
}

/// Stats of values / scale, computed in exact rationals.
SampleStats stats_of(const std::vector<std::uint64_t>& values, const mpz_class& scale)
{
    SampleStats stats;
    stats.trials = values.size();
    const ExactMoments m = moments(values);
    const mpz_class count(static_cast<unsigned long>(values.size()));
    mpq_class mean(m.sum, count * scale);
    mean.canonicalize();
    stats.mean = mean.get_d();
    if (values.size() > 1) {
        mpq_class centered(m.sum_squares * count - m.sum * m.sum, count);
        centered.canonicalize();
        mpq_class variance = centered / mpq_class(mpz_class((count - 1) * scale * scale));
        variance.canonicalize();
        stats.variance = variance.get_d();
    }
    stats.std_err = std::sqrt(stats.variance / static_cast<double>(stats.trials));
    return stats;
}

} // namespace

std::vector<std::uint64_t> bigraded_trial_sums(int d, int n, double p, int i, int j, std::uint64_t trials,
                                               std::uint64_t seed, const FieldSpec& field,
                                               const ExperimentOptions& options)
{
    check_cell(d, n, p, i, j, trials);
    const auto subsets_per_trial = static_cast<double>(binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(j)));
    const auto simplices = static_cast<double>(binomial(static_cast<std::uint64_t>(j), static_cast<std::uint64_t>(d)) +
                                               binomial(static_cast<std::uint64_t>(j), static_cast<std::uint64_t>(d + 1)));
    check_budget(subsets_per_trial * static_cast<double>(trials) * simplices, options.override_budget);

    const int degree = j - i - 1;
    const std::vector<VertexSet> subsets = k_subsets(n, j);
    const LMParams params{n, d, p, seed};
    std::vector<std::uint64_t> sums(trials, 0);
    detail::parallel_for(trials, options.workers, [&](std::size_t trial, unsigned) {
        const SimplicialComplex sample = sample_stream(params, trial);
        std::uint64_t total = 0;
        for (VertexSet subset : subsets)
            total += reduced_betti(full_subcomplex(sample, subset), degree, field);
        sums[trial] = total;
    });
    return sums;
}

SampleStats estimate_bigraded(int d, int n, double p, int i, int j, std::uint64_t trials, std::uint64_t seed,
                              const FieldSpec& field, const ExperimentOptions& options)
{
    const auto sums = bigraded_trial_sums(d, n, p, i, j, trials, seed, field, options);
    const mpz_class scale(static_cast<unsigned long>(binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(j))));
    return stats_of(sums, scale);
}

void ConvergenceConfig::validate() const
{
    if (d < 1)
        throw std::invalid_argument("config.d: must be at least 1");
    if (j < d + 1)
        throw std::invalid_argument("config.j: must be at least d+1");
    if (i != j - d && i != j - d - 1)
        throw std::invalid_argument("config.i: must be j-d or j-d-1");
    if (p_grid.empty())
        throw std::invalid_argument("config.p: grid is empty");
    for (double p : p_grid)
        if (!(p >= 0.0 && p <= 1.0))
            throw std::invalid_argument("config.p: every value must lie in [0, 1]");
    if (n_grid.empty())
        throw std::invalid_argument("config.n: grid is empty");
    for (int n : n_grid)
        if (n < j || n > kMaxVertices)
            throw std::invalid_argument("config.n: every value must lie in j..64");
    if (trials < 1)
        throw std::invalid_argument("config.trials: must be at least 1");
}

std::vector<ConvergenceRow> run_convergence(const ConvergenceConfig& config, const ExperimentOptions& options)
{
    config.validate();
    const IntPolynomial limit = config.i == config.j - config.d ? limit_poly_f(config.d, config.j, config.field)
                                                                : limit_poly_g(config.d, config.j, config.field);
    std::vector<ConvergenceRow> rows;
    for (double p : config.p_grid) {
        const double target = eval_poly(limit, p);
        for (int n : config.n_grid) {
            const auto sums =
                bigraded_trial_sums(config.d, n, p, config.i, config.j, config.trials, config.seed, config.field, options);
            const auto scale = binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(config.j));
            const SampleStats stats = stats_of(sums, mpz_class(static_cast<unsigned long>(scale)));
            double deviation = 0.0;
            for (std::uint64_t s : sums) {
                mpq_class value(mpz_class(static_cast<unsigned long>(s)), mpz_class(static_cast<unsigned long>(scale)));
                value.canonicalize();
                deviation += std::abs(value.get_d() - target);
            }
            rows.push_back(ConvergenceRow{config.d, config.j, config.i, p, n, config.trials, stats.mean, stats.std_err,
                                          target, deviation / static_cast<double>(sums.size())});
        }
    }
    return rows;
}

bool within_convergence_band(const ConvergenceRow& row)
{
    return std::abs(row.mean - row.limit) <= std::max(3.0 * row.std_err, kAcceptanceFloor);
}

VarianceScaling run_variance_scaling(const ConvergenceConfig& config, const ExperimentOptions& options)
{
    config.validate();
    if (config.n_grid.size() < 3)
        throw std::invalid_argument("config.n: variance scaling needs at least three values");
    if (config.trials < 2)
        throw std::invalid_argument("config.trials: variance needs at least two trials");

    VarianceScaling result;
    for (double p : config.p_grid) {
        std::vector<double> xs;
        std::vector<double> ys;
        for (int n : config.n_grid) {
            const SampleStats stats =
                estimate_bigraded(config.d, n, p, config.i, config.j, config.trials, config.seed, config.field, options);
            const bool excluded = stats.variance <= 0.0;
            result.rows.push_back(VarianceRow{config.d, config.j, config.i, p, n, config.trials, stats.mean,
                                              stats.variance, excluded});
            if (!excluded) {
                xs.push_back(std::log(static_cast<double>(n)));
                ys.push_back(std::log(stats.variance));
            }
        }

        VarianceFit fit{p, std::nullopt, xs.size(), {}};
        const std::size_t dropped = config.n_grid.size() - xs.size();
        if (xs.size() < 2) {
            fit.diagnostic = "fit refused: only " + std::to_string(xs.size()) +
                             " grid points have nonzero variance (the statistic is deterministic at this p)";
        } else {
            const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
            const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / static_cast<double>(ys.size());
            double sxy = 0.0;
            double sxx = 0.0;
            for (std::size_t t = 0; t < xs.size(); ++t) {
                sxy += (xs[t] - mx) * (ys[t] - my);
                sxx += (xs[t] - mx) * (xs[t] - mx);
            }
            fit.slope = sxy / sxx;
            if (dropped > 0)
                fit.diagnostic = std::to_string(dropped) + " zero-variance grid points excluded from the fit";
        }
        result.fits.push_back(std::move(fit));
    }
    return result;
}

bool CovarianceCheck::consistent() const
{
    const double target = exact.value_or(0.0);
    return std::abs(covariance - target) <= radius;
}

CovarianceCheck run_covariance_check(int d, int j, int i, int m, int n, double p, std::uint64_t trials,
                                     std::uint64_t seed, const FieldSpec& field, const ExperimentOptions& options)
{
    if (m < 0 || m > j)
        throw std::invalid_argument("overlap m must lie in 0..j");
    if (n < 2 * j - m)
        throw std::invalid_argument("n must be at least 2j - m");
    check_cell(d, n, p, i, j, trials);
    if (trials < 2)
        throw std::invalid_argument("covariance needs at least two trials");
    const double simplices = static_cast<double>(binomial(static_cast<std::uint64_t>(j), static_cast<std::uint64_t>(d)) +
                                                 binomial(static_cast<std::uint64_t>(j), static_cast<std::uint64_t>(d + 1)));
    check_budget(2.0 * static_cast<double>(trials) * simplices, options.override_budget);

    const int degree = homology_degree(d, j, i);
    const VertexSet first = VertexSet::range(j);
    const VertexSet second(VertexSet::range(2 * j - m).bits() & ~VertexSet::range(j - m).bits());
    const LMParams params{n, d, p, seed};

    std::vector<std::uint64_t> x1(trials, 0);
    std::vector<std::uint64_t> x2(trials, 0);
    detail::parallel_for(trials, options.workers, [&](std::size_t trial, unsigned) {
        const SimplicialComplex sample = sample_stream(params, trial);
        x1[trial] = reduced_betti(full_subcomplex(sample, first), degree, field);
        x2[trial] = reduced_betti(full_subcomplex(sample, second), degree, field);
    });

    // Exact sample covariance, then the standard error of the mean of the centered products.
    const mpz_class count(static_cast<unsigned long>(trials));
    mpz_class s1 = 0, s2 = 0, s12 = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        const mpz_class a(static_cast<unsigned long>(x1[t]));
        const mpz_class b(static_cast<unsigned long>(x2[t]));
        s1 += a;
        s2 += b;
        s12 += a * b;
    }
    mpq_class covariance(s12 * count - s1 * s2, count * (count - 1));
    covariance.canonicalize();

    mpq_class mean1(s1, count), mean2(s2, count);
    mean1.canonicalize();
    mean2.canonicalize();
    std::vector<double> products(trials);
    for (std::size_t t = 0; t < trials; ++t) {
        mpq_class z = (mpq_class(mpz_class(static_cast<unsigned long>(x1[t]))) - mean1) *
                      (mpq_class(mpz_class(static_cast<unsigned long>(x2[t]))) - mean2);
        products[t] = z.get_d();
    }
    const double mean_product = std::accumulate(products.begin(), products.end(), 0.0) / static_cast<double>(trials);
    double spread = 0.0;
    for (double z : products)
        spread += (z - mean_product) * (z - mean_product);
    spread /= static_cast<double>(trials - 1);

    CovarianceCheck check{d, j, i, m, n, p, trials, covariance.get_d(), std::sqrt(spread / static_cast<double>(trials)),
                          0.0, std::nullopt};
    check.radius = kAcceptanceSigmas * check.std_err;
    if (m >= d + 1) {
        try {
            check.exact = eval_poly(exact_cov_poly(d, j, m, i, field), p);
        } catch (const GuardError&) {
            check.exact.reset();
        }
    }
    return check;
}

} // namespace rmac

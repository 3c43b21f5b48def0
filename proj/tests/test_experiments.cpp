#include <doctest.h>

#include <cmath>

#include "rmac/combinatorics.hpp"
#include "rmac/errors.hpp"
#include "rmac/experiments.hpp"
#include "rmac/hochster.hpp"
#include "rmac/limit_polys.hpp"
#include "rmac/sampler.hpp"

using namespace rmac;

namespace {

const FieldSpec F2 = FieldSpec::prime(2);

ConvergenceConfig graph_config(std::vector<double> ps, std::vector<int> ns, std::uint64_t trials, std::uint64_t seed)
{
    ConvergenceConfig config;
    config.p_grid = std::move(ps);
    config.n_grid = std::move(ns);
    config.trials = trials;
    config.seed = seed;
    return config;
}

} // namespace

TEST_CASE("triangle indicator estimate")
{
    const auto stats = estimate_bigraded(1, 3, 0.5, 1, 3, 4096, 9, F2);
    CHECK(stats.trials == 4096);
    CHECK(std::abs(stats.mean - 0.125) <= kAcceptanceSigmas * stats.std_err);
    CHECK(stats.std_err == doctest::Approx(std::sqrt(stats.variance / 4096)));
}

TEST_CASE("deterministic endpoints")
{
    const auto full = estimate_bigraded(1, 6, 1.0, 2, 3, 1, 0, F2);
    CHECK(full.mean == 0.0);
    CHECK(full.variance == 0.0);
    const auto empty = estimate_bigraded(1, 6, 0.0, 2, 3, 1, 0, F2);
    CHECK(empty.mean == 2.0);
    // d = 2: every 4-subset is a tetrahedron boundary at p = 1 and a K4 graph at p = 0.
    CHECK(estimate_bigraded(2, 6, 1.0, 1, 4, 3, 0, F2).mean == 1.0);
    CHECK(estimate_bigraded(2, 6, 0.0, 2, 4, 3, 0, F2).mean == 3.0);
}

TEST_CASE("trial sums equal the Hochster table entry of each sample")
{
    const auto sums = bigraded_trial_sums(1, 7, 0.4, 2, 3, 20, 55, F2);
    REQUIRE(sums.size() == 20);
    for (std::uint64_t t = 0; t < 20; ++t) {
        const auto k = sample_stream({7, 1, 0.4, 55}, t);
        CHECK(sums[t] == bigraded_betti(k, F2).at(2, 3));
    }
}

TEST_CASE("normalized means stay within the homological bounds")
{
    for (double p : {0.1, 0.5, 0.9}) {
        const auto h0 = estimate_bigraded(1, 7, p, 2, 3, 50, 3, F2);
        CHECK(h0.mean >= 0.0);
        CHECK(h0.mean <= 2.0);
        const auto h1 = estimate_bigraded(1, 7, p, 1, 3, 50, 3, F2);
        CHECK(h1.mean >= 0.0);
        CHECK(h1.mean <= 1.0);
    }
}

TEST_CASE("worker count does not change results")
{
    ExperimentOptions one, many;
    one.workers = 1;
    many.workers = 4;
    CHECK(bigraded_trial_sums(2, 7, 0.5, 2, 4, 40, 8, F2, one) == bigraded_trial_sums(2, 7, 0.5, 2, 4, 40, 8, F2, many));
    const auto config = graph_config({0.3, 0.6}, {6, 8}, 30, 4);
    const auto a = run_convergence(config, one);
    const auto b = run_convergence(config, many);
    REQUIRE(a.size() == b.size());
    for (std::size_t r = 0; r < a.size(); ++r) {
        CHECK(a[r].mean == b[r].mean);
        CHECK(a[r].std_err == b[r].std_err);
        CHECK(a[r].abs_dev == b[r].abs_dev);
    }
}

TEST_CASE("work budget")
{
    CHECK_THROWS_AS(estimate_bigraded(1, 60, 0.5, 2, 3, 100000, 0, F2), GuardError);
    CHECK_THROWS_AS(bigraded_trial_sums(1, 5, 0.5, 0, 3, 1, 0, F2), std::invalid_argument);
    CHECK_THROWS_AS(estimate_bigraded(1, 5, 0.5, 2, 3, 0, 0, F2), std::invalid_argument);
}

TEST_CASE("config validation names the field")
{
    auto config = graph_config({0.5}, {8}, 10, 0);
    CHECK_NOTHROW(config.validate());
    auto bad = config;
    bad.n_grid = {2};
    CHECK_THROWS_WITH_AS(bad.validate(), doctest::Contains("config.n"), std::invalid_argument);
    bad = config;
    bad.p_grid = {1.5};
    CHECK_THROWS_WITH_AS(bad.validate(), doctest::Contains("config.p"), std::invalid_argument);
    bad = config;
    bad.i = 0;
    CHECK_THROWS_WITH_AS(bad.validate(), doctest::Contains("config.i"), std::invalid_argument);
    bad = config;
    bad.trials = 0;
    CHECK_THROWS_WITH_AS(bad.validate(), doctest::Contains("config.trials"), std::invalid_argument);
}

TEST_CASE("convergence rows")
{
    const auto rows = run_convergence(graph_config({0.3, 1.0}, {6, 9}, 40, 1));
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].p == 0.3);
    CHECK(rows[0].n == 6);
    CHECK(rows[1].n == 9);
    CHECK(rows[2].p == 1.0);
    CHECK(rows[0].limit == doctest::Approx(eval_poly(limit_poly_f(1, 3), 0.3)));
    for (int r : {2, 3}) {
        CHECK(rows[static_cast<std::size_t>(r)].mean == 0.0);
        CHECK(rows[static_cast<std::size_t>(r)].abs_dev == 0.0);
        CHECK(rows[static_cast<std::size_t>(r)].limit == 0.0);
    }
}

TEST_CASE("cycle statistic uses the g limit")
{
    auto config = graph_config({0.5}, {6}, 20, 2);
    config.i = 1;
    const auto rows = run_convergence(config);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].limit == doctest::Approx(0.125));
}

TEST_CASE("missing-edge density settles on 1 - p")
{
    auto config = graph_config({0.3, 0.7}, {10, 20}, 200, 5);
    config.j = 2;
    config.i = 1;
    for (const auto& row : run_convergence(config)) {
        CHECK(row.limit == doctest::Approx(1 - row.p));
        CHECK(std::abs(row.mean - row.limit) <= 3 * row.std_err);
        CHECK(within_convergence_band(row));
    }
}

TEST_CASE("variance scaling refuses degenerate grids")
{
    for (double p : {0.0, 1.0}) {
        const auto scaling = run_variance_scaling(graph_config({p}, {6, 8, 10}, 20, 0));
        REQUIRE(scaling.fits.size() == 1);
        CHECK_FALSE(scaling.fits[0].slope.has_value());
        CHECK_FALSE(scaling.fits[0].diagnostic.empty());
        for (const auto& row : scaling.rows) {
            CHECK(row.variance == 0.0);
            CHECK(row.excluded);
        }
    }
    CHECK_THROWS_AS(run_variance_scaling(graph_config({0.5}, {6, 8}, 20, 0)), std::invalid_argument);
}

TEST_CASE("variance slope is stable across seeds")
{
    const auto first = run_variance_scaling(graph_config({0.5}, {8, 12, 16, 24}, 250, 100));
    const auto second = run_variance_scaling(graph_config({0.5}, {8, 12, 16, 24}, 500, 200));
    REQUIRE(first.fits[0].slope.has_value());
    REQUIRE(second.fits[0].slope.has_value());
    CHECK(std::abs(*first.fits[0].slope - *second.fits[0].slope) <= 0.5);
    CHECK(first.fits[0].points == 4);
}

TEST_CASE("covariance checks")
{
    for (int m : {0, 1}) {
        const auto check = run_covariance_check(1, 3, 2, m, 6, 0.5, 5000, 17, F2);
        CHECK_FALSE(check.exact.has_value());
        CHECK(check.radius == doctest::Approx(kAcceptanceSigmas * check.std_err));
        CHECK(std::abs(check.covariance) <= check.radius);
        CHECK(check.consistent());
    }
    const auto overlap = run_covariance_check(1, 3, 2, 2, 4, 0.5, 5000, 17, F2);
    REQUIRE(overlap.exact.has_value());
    CHECK(*overlap.exact == doctest::Approx(9.0 / 64));
    CHECK(std::abs(overlap.covariance - *overlap.exact) <= overlap.radius);
    CHECK(overlap.consistent());
    CHECK_THROWS_AS(run_covariance_check(1, 3, 2, 1, 4, 0.5, 10, 0, F2), std::invalid_argument);
}

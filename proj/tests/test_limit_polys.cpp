#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "rmac/combinatorics.hpp"
#include "rmac/errors.hpp"
#include "rmac/limit_polys.hpp"
#include "rmac/rng.hpp"
#include "rmac/sampler.hpp"

using namespace rmac;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);

/// (1-p)^2 (2+p), multiplied out by the polynomial class itself.
IntPolynomial factored_f3()
{
    const IntPolynomial q{1, -1};
    return q * q * IntPolynomial{2, 1};
}

} // namespace

TEST_CASE("polynomial arithmetic")
{
    CHECK(IntPolynomial{1, 0, 0} == IntPolynomial{1});
    CHECK(IntPolynomial{0, 0}.is_zero());
    CHECK(IntPolynomial{}.degree() == -1);
    CHECK(IntPolynomial::bernstein(1, 2) == IntPolynomial{0, 1, -2, 1});
    CHECK(IntPolynomial::bernstein(0, 0) == IntPolynomial{1});
    CHECK((IntPolynomial{1, 1} * IntPolynomial{1, -1}) == IntPolynomial{1, 0, -1});
    CHECK((IntPolynomial{1, 2} - IntPolynomial{1, 2}).is_zero());
    CHECK(IntPolynomial{2, -3, 0, 1}.to_string() == "2 - 3*p + p^3");
    CHECK(IntPolynomial{}.to_string() == "0");
    CHECK(IntPolynomial{0, -1}.to_string() == "-p");
    CHECK(eval_poly(IntPolynomial{2, -3, 0, 1}, mpq_class(1, 2)) == mpq_class(5, 8));
    CHECK(eval_poly(IntPolynomial{2, -3, 0, 1}, 0.5) == doctest::Approx(0.625));
}

TEST_CASE("homology degree")
{
    CHECK(homology_degree(1, 3, 2) == 0);
    CHECK(homology_degree(1, 3, 1) == 1);
    CHECK(homology_degree(2, 5, 3) == 1);
    CHECK_THROWS_AS(homology_degree(1, 3, 0), std::invalid_argument);
}

TEST_CASE("graph limit polynomials")
{
    CHECK(factored_f3() == IntPolynomial{2, -3, 0, 1});
    CHECK(limit_poly_f(1, 3, Q) == factored_f3());
    CHECK(limit_poly_g(1, 3, Q) == IntPolynomial{0, 0, 0, 1});
    CHECK(limit_poly_f(1, 2, Q) == IntPolynomial{1, -1});
    CHECK(limit_poly_g(1, 2, Q).is_zero());
    CHECK(limit_poly_g(1, 4, Q) == IntPolynomial{0, 0, 0, 4, 3, -6, 2});
}

TEST_CASE("four-vertex cycle polynomial from the edge-count census")
{
    // 4 triangles with 3 edges, all 15 four-edge graphs carry one cycle,
    // 6 five-edge graphs carry two, K4 carries three.
    IntPolynomial census = IntPolynomial{4} * oracle::monomial_weight(3, 3);
    census += IntPolynomial{15} * oracle::monomial_weight(4, 2);
    census += IntPolynomial{12} * oracle::monomial_weight(5, 1);
    census += IntPolynomial{3} * oracle::monomial_weight(6, 0);
    CHECK(census == limit_poly_g(1, 4, Q));
    CHECK(eval_poly(census, mpq_class(1)) == 3);

    // The alternative closed form 2p^3(3p^3 - 9p^2 - 15p + 7) is -28 at p = 1.
    const IntPolynomial alternative = IntPolynomial{0, 0, 0, 2} * IntPolynomial{7, -15, -9, 3};
    CHECK(eval_poly(alternative, mpq_class(1)) == -28);
    CHECK_FALSE(alternative == census);
}

TEST_CASE("two-dimensional limit polynomials")
{
    CHECK(limit_poly_f(2, 3, Q) == IntPolynomial{1, -1});
    CHECK(limit_poly_g(2, 3, Q).is_zero());
    CHECK(limit_poly_f(2, 4, Q) == IntPolynomial{3, -4, 0, 0, 1});
    CHECK(limit_poly_g(2, 4, Q) == IntPolynomial{0, 0, 0, 0, 1});
    CHECK(limit_poly_g(2, 5, F2) == IntPolynomial{0, 0, 0, 0, 5, 0, 10, -10, -15, 20, -6});
}

TEST_CASE("enumeration agrees with the naive oracle")
{
    for (const auto& field : {Q, F2, FieldSpec::prime(3)}) {
        for (int j = 2; j <= 4; ++j) {
            CHECK(limit_poly_f(1, j, field) == oracle::naive_expectation(1, j, 0, field));
            CHECK(limit_poly_g(1, j, field) == oracle::naive_expectation(1, j, 1, field));
            CHECK(exact_variance_poly(1, j, j - 1, field) == oracle::naive_expectation(1, j, 0, field, true));
            CHECK(exact_variance_poly(1, j, j - 2, field) == oracle::naive_expectation(1, j, 1, field, true));
        }
        for (int j = 3; j <= 4; ++j) {
            CHECK(limit_poly_f(2, j, field) == oracle::naive_expectation(2, j, 1, field));
            CHECK(limit_poly_g(2, j, field) == oracle::naive_expectation(2, j, 2, field));
        }
    }
}

TEST_CASE("variance polynomials")
{
    CHECK(exact_variance_poly(1, 2, 1, Q) == IntPolynomial{0, 1, -1});
    CHECK(exact_variance_poly(1, 3, 2, Q) == IntPolynomial{0, 3, -3, -5, 6, 0, -1});
    // Written as E[X^2] - E[X]^2 with E[X^2] = 4(1-p)^3 + 3p(1-p)^2.
    const IntPolynomial q{1, -1};
    const IntPolynomial second = IntPolynomial{4} * q * q * q + IntPolynomial{0, 3} * q * q;
    CHECK(exact_variance_poly(1, 3, 2, Q) == second - factored_f3() * factored_f3());
    CHECK(exact_variance_poly(1, 3, 1, Q) == IntPolynomial{0, 0, 0, 1, 0, 0, -1});
    CHECK(exact_variance_poly(2, 3, 1, Q) == IntPolynomial{0, 1, -1});
}

TEST_CASE("covariance polynomials")
{
    CHECK(exact_cov_poly(1, 3, 2, 2, Q) == IntPolynomial{0, 1, -1, -2, 2, 1, -1});
    CHECK(eval_poly(exact_cov_poly(1, 3, 2, 2, Q), mpq_class(1, 2)) == mpq_class(9, 64));
    CHECK(exact_cov_poly(1, 3, 2, 2, Q) == oracle::naive_covariance(1, 3, 2, 0, Q));
    CHECK(exact_cov_poly(1, 3, 2, 1, F2) == oracle::naive_covariance(1, 3, 2, 1, F2));
    CHECK(exact_cov_poly(2, 4, 3, 2, F2) == oracle::naive_covariance(2, 4, 3, 1, F2));
    for (int m = 0; m <= 1; ++m) {
        CHECK(exact_cov_poly(1, 3, m, 2, Q).is_zero());
        CHECK(exact_cov_poly(1, 3, m, 1, Q).is_zero());
        CHECK(oracle::naive_covariance(1, 3, m, 0, Q).is_zero());
    }
    CHECK(exact_cov_poly(1, 2, 1, 1, Q).is_zero());
    CHECK(exact_cov_poly(2, 4, 2, 2, Q).is_zero());
    // m = 3 <= d: zero without enumeration even though 2 C(8,4) exceeds the guard.
    CHECK(exact_cov_poly(3, 8, 3, 5, F2).is_zero());
    CHECK_THROWS_AS(exact_cov_poly(1, 3, 4, 2, Q), std::invalid_argument);
}

TEST_CASE("degree bounds and endpoints")
{
    for (int d = 1; d <= 2; ++d) {
        for (int j = d + 1; j <= d + 3; ++j) {
            const auto m = static_cast<int>(binomial(j, d + 1));
            if (m > kEnumerationGuard)
                continue;
            const auto f = limit_poly_f(d, j, F2);
            const auto g = limit_poly_g(d, j, F2);
            CHECK(f.degree() <= m);
            CHECK(g.degree() <= m);
            for (int i : {j - d, j - d - 1}) {
                const auto v = exact_variance_poly(d, j, i, F2);
                CHECK(v.degree() <= 2 * m);
                CHECK(eval_poly(v, mpq_class(0)) == 0);
                CHECK(eval_poly(v, mpq_class(1)) == 0);
            }
            // At p = 0 and p = 1 the values are those of the two skeleta.
            CHECK(eval_poly(f, mpq_class(0)) == static_cast<long>(reduced_betti(build_skeleton(j, d - 1), d - 1, F2)));
            CHECK(eval_poly(f, mpq_class(1)) == 0);
            CHECK(eval_poly(g, mpq_class(0)) == 0);
            CHECK(eval_poly(g, mpq_class(1)) == static_cast<long>(reduced_betti(build_skeleton(j, d), d, F2)));
        }
    }
}

TEST_CASE("polynomials are nonnegative on [0,1]")
{
    const std::vector<IntPolynomial> polys{limit_poly_f(1, 4), limit_poly_g(1, 4), exact_variance_poly(1, 4, 3),
                                           exact_variance_poly(1, 4, 2), limit_poly_f(2, 4), limit_poly_g(2, 5)};
    for (const auto& poly : polys)
        for (int k = 0; k <= 100; ++k)
            CHECK(eval_poly(poly, mpq_class(k, 100)) >= 0);
}

TEST_CASE("limit polynomials match Monte Carlo means")
{
    const std::uint64_t samples = 10000;
    for (double p : {0.25, 0.5, 0.75}) {
        const auto f = eval_poly(limit_poly_f(1, 4, Q), p);
        const auto g = eval_poly(limit_poly_g(1, 4, Q), p);
        double sf = 0, sf2 = 0, sg = 0, sg2 = 0;
        for (std::uint64_t t = 0; t < samples; ++t) {
            const auto k = sample_stream({4, 1, p, 314}, t);
            const auto x0 = static_cast<double>(reduced_betti(k, 0, Q));
            const auto x1 = static_cast<double>(reduced_betti(k, 1, Q));
            sf += x0;
            sf2 += x0 * x0;
            sg += x1;
            sg2 += x1 * x1;
        }
        auto se = [&](double s, double s2) {
            const double mean = s / samples;
            return std::sqrt((s2 / samples - mean * mean) / (samples - 1));
        };
        CHECK(std::abs(sf / samples - f) <= 4 * se(sf, sf2));
        CHECK(std::abs(sg / samples - g) <= 4 * se(sg, sg2));
    }
}

TEST_CASE("guards and argument checks")
{
    CHECK_THROWS_AS(limit_poly_f(1, 8, Q), GuardError); // C(8,2) = 28 candidates
    CHECK_THROWS_AS(limit_poly_g(2, 7, Q), GuardError); // C(7,3) = 35
    CHECK_THROWS_AS(limit_poly_f(0, 3, Q), std::invalid_argument);
    CHECK_THROWS_AS(limit_poly_f(2, 2, Q), std::invalid_argument);
    CHECK_THROWS_AS(exact_variance_poly(1, 3, 0, Q), std::invalid_argument);
    CHECK_THROWS_AS(exact_cov_poly(1, 6, 2, 5, Q), GuardError); // 2 C(6,2) - 1 = 29
}

TEST_CASE("worker count does not change polynomials")
{
    CHECK(limit_poly_g(1, 5, F2, 1) == limit_poly_g(1, 5, F2, 4));
    CHECK(exact_variance_poly(2, 5, 3, Q, 1) == exact_variance_poly(2, 5, 3, Q, 3));
}

#ifndef RMAC_LIMIT_POLYS_HPP
#define RMAC_LIMIT_POLYS_HPP

#include "rmac/field.hpp"
#include "rmac/polynomial.hpp"

namespace rmac {

/// Largest number of candidate d-simplices an exhaustive enumeration may range over.
inline constexpr int kEnumerationGuard = 24;

/// Homological degree k = j - i - 1 read by beta^{-i,2j} for Y^d.
/// Throws std::invalid_argument unless i is j-d (k = d-1) or j-d-1 (k = d).
int homology_degree(int d, int j, int i);

/// E[dim H~_{d-1}(Y^d(j,p))] as an exact polynomial in p.
/// Requires d >= 1, j >= d+1, and C(j, d+1) <= kEnumerationGuard (GuardError otherwise).
IntPolynomial limit_poly_f(int d, int j, const FieldSpec& field = FieldSpec::prime(2), unsigned workers = 0);

/// E[dim H~_d(Y^d(j,p))].
IntPolynomial limit_poly_g(int d, int j, const FieldSpec& field = FieldSpec::prime(2), unsigned workers = 0);

/// Var[dim H~_{j-i-1}(Y^d(j,p))] for i in {j-d, j-d-1}.
IntPolynomial exact_variance_poly(int d, int j, int i, const FieldSpec& field = FieldSpec::prime(2),
                                  unsigned workers = 0);

/// Cov[X_{J1}, X_{J2}] with |J1| = |J2| = j, |J1 n J2| = m, X = dim H~_{j-i-1} of
/// the full subcomplex. J1 = {1..j}, J2 = {j-m+1..2j-m}. Only the d-simplices
/// inside J1 or J2 are enumerated; the guard applies to their number.
/// For m <= d the two variables share no candidate simplex and the zero
/// polynomial is returned without enumeration when the guard would refuse.
IntPolynomial exact_cov_poly(int d, int j, int m, int i, const FieldSpec& field = FieldSpec::prime(2),
                             unsigned workers = 0);

} // namespace rmac

#endif

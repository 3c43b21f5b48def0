#ifndef RMAC_POLYNOMIAL_HPP
#define RMAC_POLYNOMIAL_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace rmac {

/// Polynomial in p with exact integer coefficients, ascending degree, no
/// trailing zeros (the zero polynomial has no coefficients).
class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<long> coeffs);
    explicit IntPolynomial(std::vector<mpz_class> coeffs);

    /// p^power (1 - p)^complement, expanded.
    static IntPolynomial bernstein(unsigned power, unsigned complement);

    const std::vector<mpz_class>& coeffs() const { return coeffs_; }
    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const mpz_class& coeff(std::size_t k) const;

    IntPolynomial& operator+=(const IntPolynomial& other);
    IntPolynomial& operator-=(const IntPolynomial& other);
    IntPolynomial& operator*=(const mpz_class& scalar);

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

    /// e.g. "2 - 3*p + p^3"; "0" for the zero polynomial.
    std::string to_string() const;

private:
    void trim();
    std::vector<mpz_class> coeffs_;
};

/// Horner evaluation, exact for rational input.
mpq_class eval_poly(const IntPolynomial& poly, const mpq_class& p);
double eval_poly(const IntPolynomial& poly, double p);

} // namespace rmac

#endif

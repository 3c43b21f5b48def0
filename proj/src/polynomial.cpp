#include "rmac/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace rmac {

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs)
{
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs)
        coeffs_.emplace_back(c);
    trim();
}

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

IntPolynomial IntPolynomial::bernstein(unsigned power, unsigned complement)
{
    // (1 - p)^complement = sum_t (-1)^t C(complement, t) p^t
    std::vector<mpz_class> coeffs(power + complement + 1);
    mpz_class binom = 1;
    for (unsigned t = 0; t <= complement; ++t) {
        coeffs[power + t] = (t % 2 == 0) ? binom : mpz_class(-binom);
        binom = binom * (complement - t) / (t + 1);
    }
    return IntPolynomial(std::move(coeffs));
}

const mpz_class& IntPolynomial::coeff(std::size_t k) const
{
    static const mpz_class zero = 0;
    return k < coeffs_.size() ? coeffs_[k] : zero;
}

void IntPolynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other)
{
    if (coeffs_.size() < other.coeffs_.size())
        coeffs_.resize(other.coeffs_.size());
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k)
        coeffs_[k] += other.coeffs_[k];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other)
{
    if (coeffs_.size() < other.coeffs_.size())
        coeffs_.resize(other.coeffs_.size());
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k)
        coeffs_[k] -= other.coeffs_[k];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const mpz_class& scalar)
{
    for (auto& c : coeffs_)
        c *= scalar;
    trim();
    return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<mpz_class> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string() const
{
    if (coeffs_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const mpz_class& c = coeffs_[k];
        if (c == 0)
            continue;
        mpz_class magnitude = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (k == 0 || magnitude != 1) {
            os << magnitude.get_str();
            if (k > 0)
                os << "*";
        }
        if (k >= 1)
            os << "p";
        if (k >= 2)
            os << "^" << k;
    }
    return os.str();
}

mpq_class eval_poly(const IntPolynomial& poly, const mpq_class& p)
{
    mpq_class acc = 0;
    const auto& c = poly.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * p + mpq_class(*it);
    acc.canonicalize();
    return acc;
}

double eval_poly(const IntPolynomial& poly, double p)
{
    double acc = 0.0;
    const auto& c = poly.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * p + it->get_d();
    return acc;
}

} // namespace rmac

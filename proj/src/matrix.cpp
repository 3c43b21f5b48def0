#include "rmac/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace rmac {

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size())
{
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_)
            throw std::invalid_argument("ragged matrix literal");
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n)
{
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntegerMatrix IntegerMatrix::transposed() const
{
    IntegerMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

bool IntegerMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](std::int64_t x) { return x == 0; });
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b)
{
    if (a.cols() != b.rows())
        throw std::invalid_argument("matrix product shape mismatch");
    IntegerMatrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            std::int64_t lhs = a(i, k);
            if (lhs == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                std::int64_t term = 0;
                if (__builtin_mul_overflow(lhs, b(k, j), &term) ||
                    __builtin_add_overflow(out(i, j), term, &out(i, j)))
                    throw std::invalid_argument("matrix product overflows 64 bits");
            }
        }
    }
    return out;
}

} // namespace rmac

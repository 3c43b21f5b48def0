#ifndef RMAC_MATRIX_HPP
#define RMAC_MATRIX_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace rmac {

/// Dense row-major integer matrix. Entries are 64-bit; the rank routines
/// promote to arbitrary precision internally where elimination needs it.
class IntegerMatrix {
public:
    IntegerMatrix() = default;
    IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    /// Row-by-row literal; throws std::invalid_argument on ragged rows.
    IntegerMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

    static IntegerMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<std::int64_t>& data() const { return data_; }

    IntegerMatrix transposed() const;
    bool is_zero() const;

    friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::int64_t> data_;
};

/// Throws std::invalid_argument on mismatched shapes or 64-bit overflow.
IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);

} // namespace rmac

#endif

#include "rmac/linalg.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <cstdint>
#include <utility>
#include <vector>
#include <optional>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace rmac {

namespace {

std::uint64_t reduce(std::int64_t x, std::uint64_t p)
{
    std::int64_t r = x % static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p)
{
    // Fermat: a^(p-2).
    std::uint64_t result = 1;
    std::uint64_t exp = p - 2;
    while (exp > 0) {
        if (exp & 1)
            result = mul_mod(result, a, p);
        a = mul_mod(a, a, p);
        exp >>= 1;
    }
    return result;
}

std::size_t rank_gf2(const IntegerMatrix& m)
{
    const std::size_t words = (m.cols() + 63) / 64;
    std::vector<std::uint64_t> rows(m.rows() * words, 0);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m(r, c) & 1)
                rows[r * words + c / 64] |= std::uint64_t{1} << (c % 64);

    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        const std::size_t w = c / 64;
        const std::uint64_t bit = std::uint64_t{1} << (c % 64);
        std::size_t pivot = rank;
        while (pivot < m.rows() && !(rows[pivot * words + w] & bit))
            ++pivot;
        if (pivot == m.rows())
            continue;
        if (pivot != rank)
            std::swap_ranges(rows.begin() + pivot * words, rows.begin() + (pivot + 1) * words,
                             rows.begin() + rank * words);
        for (std::size_t r = rank + 1; r < m.rows(); ++r) {
            if (rows[r * words + w] & bit)
                for (std::size_t k = w; k < words; ++k)
                    rows[r * words + k] ^= rows[rank * words + k];
        }
        ++rank;
    }
    return rank;
}

std::size_t rank_gfp(const IntegerMatrix& m, std::uint64_t p)
{
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::uint64_t> a(rows * cols);
    for (std::size_t i = 0; i < rows * cols; ++i)
        a[i] = reduce(m.data()[i], p);

    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot * cols + c] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        if (pivot != rank)
            std::swap_ranges(a.begin() + pivot * cols, a.begin() + (pivot + 1) * cols,
                             a.begin() + rank * cols);
        const std::uint64_t inv = inverse_mod(a[rank * cols + c], p);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            std::uint64_t lead = a[r * cols + c];
            if (lead == 0)
                continue;
            const std::uint64_t factor = mul_mod(lead, inv, p);
            for (std::size_t k = c; k < cols; ++k) {
                std::uint64_t sub = mul_mod(factor, a[rank * cols + k], p);
                std::uint64_t& x = a[r * cols + k];
                x = x >= sub ? x - sub : x + p - sub;
            }
        }
        ++rank;
    }
    return rank;
}

// Fraction-free elimination. Every stored entry is a minor of the input, so the
// division by the previous pivot is exact.
template <typename Int, typename Step>
std::size_t bareiss(std::vector<Int>& a, std::size_t rows, std::size_t cols, Step step)
{
    Int previous = 1;
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot * cols + c] == 0)
            ++pivot;
        if (pivot == rows)
            continue;
        if (pivot != rank)
            for (std::size_t k = 0; k < cols; ++k)
                std::swap(a[pivot * cols + k], a[rank * cols + k]);
        const Int& lead = a[rank * cols + c];
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t k = c + 1; k < cols; ++k) {
                if (!step(a[r * cols + k], lead, a[r * cols + c], a[rank * cols + k], previous))
                    return static_cast<std::size_t>(-1);
            }
            a[r * cols + c] = 0;
        }
        previous = lead;
        ++rank;
    }
    return rank;
}

std::optional<std::size_t> rank_bareiss_int64(const IntegerMatrix& m)
{
    std::vector<std::int64_t> a = m.data();
    auto step = [](std::int64_t& x, std::int64_t lead, std::int64_t below, std::int64_t right,
                   std::int64_t previous) {
        __int128 value = static_cast<__int128>(lead) * x - static_cast<__int128>(below) * right;
        value /= previous;
        if (value > INT64_MAX || value < INT64_MIN)
            return false;
        x = static_cast<std::int64_t>(value);
        return true;
    };
    std::size_t rank = bareiss(a, m.rows(), m.cols(), step);
    if (rank == static_cast<std::size_t>(-1))
        return std::nullopt;
    return rank;
}

std::size_t rank_bareiss_mpz(const IntegerMatrix& m)
{
    std::vector<mpz_class> a(m.data().size());
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] = static_cast<long>(m.data()[i]);
    mpz_class scratch;
    auto step = [&scratch](mpz_class& x, const mpz_class& lead, const mpz_class& below,
                           const mpz_class& right, const mpz_class& previous) {
        x *= lead;
        scratch = below * right;
        x -= scratch;
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), previous.get_mpz_t());
        return true;
    };
    return bareiss(a, m.rows(), m.cols(), step);
}

using SparseRow = std::vector<std::pair<std::uint32_t, std::int64_t>>;

// Eliminates on +-1 pivots only, so every row operation stays integral and the
// rational rank is preserved. Pivots are chosen by Markowitz cost to limit fill.
// Boundary-type matrices usually reduce completely; whatever is left goes to
// Bareiss. Returns nullopt on 64-bit overflow.
std::optional<std::size_t> eliminate_unit_pivots(std::vector<SparseRow>& rows, std::size_t cols)
{
    std::vector<std::size_t> col_count(cols, 0);
    for (const auto& row : rows)
        for (auto [c, v] : row)
            ++col_count[c];

    std::size_t pivots = 0;
    SparseRow merged;
    for (;;) {
        std::size_t best_row = rows.size();
        std::uint32_t best_col = 0;
        std::size_t best_cost = SIZE_MAX;
        for (std::size_t r = 0; r < rows.size() && best_cost > 0; ++r)
            for (auto [c, v] : rows[r])
                if ((v == 1 || v == -1)) {
                    const std::size_t cost = (rows[r].size() - 1) * (col_count[c] - 1);
                    if (cost < best_cost) {
                        best_cost = cost;
                        best_row = r;
                        best_col = c;
                    }
                }
        if (best_row == rows.size())
            return pivots;

        const SparseRow pivot = std::move(rows[best_row]);
        rows[best_row].clear();
        for (auto [c, v] : pivot)
            --col_count[c];
        const auto lead = std::lower_bound(pivot.begin(), pivot.end(), std::pair{best_col, INT64_MIN})->second;

        for (auto& row : rows) {
            const auto hit = std::lower_bound(row.begin(), row.end(), std::pair{best_col, INT64_MIN});
            if (hit == row.end() || hit->first != best_col)
                continue;
            const std::int64_t factor = hit->second * lead; // lead is its own inverse
            merged.clear();
            auto a = row.begin();
            auto b = pivot.begin();
            while (a != row.end() || b != pivot.end()) {
                if (b == pivot.end() || (a != row.end() && a->first < b->first)) {
                    merged.push_back(*a++);
                    continue;
                }
                std::int64_t scaled = 0;
                if (__builtin_mul_overflow(b->second, factor, &scaled))
                    return std::nullopt;
                std::int64_t value = -scaled;
                const std::uint32_t c = b->first;
                if (a != row.end() && a->first == c) {
                    if (__builtin_sub_overflow(a->second, scaled, &value))
                        return std::nullopt;
                    ++a;
                    --col_count[c];
                }
                ++b;
                if (value != 0) {
                    merged.emplace_back(c, value);
                    ++col_count[c];
                }
            }
            row.swap(merged);
        }
        ++pivots;
    }
}

} // namespace

std::size_t rank_mod_p(const IntegerMatrix& matrix, std::uint64_t p)
{
    if (p >= (std::uint64_t{1} << 32) || !is_prime(p))
        throw std::invalid_argument("rank_mod_p: modulus " + std::to_string(p) +
                                    " is not a prime below 2^32");
    if (matrix.empty())
        return 0;
    if (p == 2)
        return rank_gf2(matrix);
    return rank_gfp(matrix, p);
}

std::size_t rank_rational(const IntegerMatrix& matrix)
{
    if (matrix.empty())
        return 0;
    std::vector<SparseRow> rows(matrix.rows());
    for (std::size_t r = 0; r < matrix.rows(); ++r)
        for (std::size_t c = 0; c < matrix.cols(); ++c)
            if (matrix(r, c) != 0)
                rows[r].emplace_back(static_cast<std::uint32_t>(c), matrix(r, c));

    IntegerMatrix rest = matrix;
    std::size_t pivots = 0;
    if (auto found = eliminate_unit_pivots(rows, matrix.cols())) {
        pivots = *found;
        std::vector<std::uint32_t> used;
        std::size_t live = 0;
        for (const auto& row : rows) {
            live += row.empty() ? 0 : 1;
            for (auto [c, v] : row)
                used.push_back(c);
        }
        std::sort(used.begin(), used.end());
        used.erase(std::unique(used.begin(), used.end()), used.end());
        rest = IntegerMatrix(live, used.size());
        std::size_t r = 0;
        for (const auto& row : rows) {
            if (row.empty())
                continue;
            for (auto [c, v] : row)
                rest(r, static_cast<std::size_t>(std::lower_bound(used.begin(), used.end(), c) - used.begin())) = v;
            ++r;
        }
        if (rest.empty())
            return pivots;
    }
    if (auto fast = rank_bareiss_int64(rest))
        return pivots + *fast;
    return pivots + rank_bareiss_mpz(rest);
}

std::size_t rank(const IntegerMatrix& matrix, const FieldSpec& field)
{
    if (field.is_rational())
        return rank_rational(matrix);
    return rank_mod_p(matrix, field.modulus());
}

ModularEchelon::ModularEchelon(std::size_t dimension, std::uint64_t prime)
    : dimension_(dimension), prime_(prime), words_(prime == 2 ? (dimension + 63) / 64 : dimension)
{
    if (prime >= (std::uint64_t{1} << 62) || !is_prime(prime))
        throw std::invalid_argument("ModularEchelon: modulus must be a prime below 2^62");
    scratch_.assign(words_, 0);
}

bool ModularEchelon::insert(std::span<const std::int64_t> vector)
{
    if (vector.size() != dimension_)
        throw std::invalid_argument("ModularEchelon: vector length mismatch");
    const std::size_t count = pivots_.size();

    if (prime_ == 2) {
        std::fill(scratch_.begin(), scratch_.end(), 0);
        for (std::size_t i = 0; i < dimension_; ++i)
            if (vector[i] & 1)
                scratch_[i / 64] |= std::uint64_t{1} << (i % 64);
        for (std::size_t t = 0; t < count; ++t) {
            const std::size_t piv = pivots_[t];
            if (scratch_[piv / 64] >> (piv % 64) & 1) {
                const std::uint64_t* row = storage_.data() + t * words_;
                for (std::size_t w = 0; w < words_; ++w)
                    scratch_[w] ^= row[w];
            }
        }
        for (std::size_t w = 0; w < words_; ++w) {
            if (scratch_[w] != 0) {
                pivots_.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(scratch_[w])));
                storage_.insert(storage_.end(), scratch_.begin(), scratch_.end());
                return true;
            }
        }
        return false;
    }

    for (std::size_t i = 0; i < dimension_; ++i)
        scratch_[i] = reduce(vector[i], prime_);
    for (std::size_t t = 0; t < count; ++t) {
        const std::uint64_t factor = scratch_[pivots_[t]];
        if (factor == 0)
            continue;
        const std::uint64_t* row = storage_.data() + t * words_;
        for (std::size_t i = 0; i < dimension_; ++i) {
            if (row[i] == 0)
                continue;
            std::uint64_t sub = mul_mod(factor, row[i], prime_);
            std::uint64_t& x = scratch_[i];
            x = x >= sub ? x - sub : x + prime_ - sub;
        }
    }
    for (std::size_t i = 0; i < dimension_; ++i) {
        if (scratch_[i] != 0) {
            const std::uint64_t inv = inverse_mod(scratch_[i], prime_);
            for (std::size_t k = i; k < dimension_; ++k)
                scratch_[k] = mul_mod(scratch_[k], inv, prime_);
            pivots_.push_back(i);
            storage_.insert(storage_.end(), scratch_.begin(), scratch_.end());
            return true;
        }
    }
    return false;
}

void ModularEchelon::pop()
{
    if (pivots_.empty())
        throw std::logic_error("ModularEchelon::pop on empty basis");
    pivots_.pop_back();
    storage_.resize(storage_.size() - words_);
}

} // namespace rmac

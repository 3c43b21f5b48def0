#ifndef RMAC_LINALG_HPP
#define RMAC_LINALG_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rmac/field.hpp"
#include "rmac/matrix.hpp"

namespace rmac {

/// Rank of M with entries reduced mod p. Throws std::invalid_argument if p is
/// not a prime below 2^32.
std::size_t rank_mod_p(const IntegerMatrix& matrix, std::uint64_t p);

/// Exact rank over Q by fraction-free (Bareiss) elimination. Starts in 128-bit
/// checked arithmetic and restarts with GMP integers on overflow.
std::size_t rank_rational(const IntegerMatrix& matrix);

std::size_t rank(const IntegerMatrix& matrix, const FieldSpec& field);

/// Incremental row-echelon basis of vectors in F_p^dimension.
///
/// insert() reduces a vector against the current basis and keeps it when it is
/// independent; pop() undoes the most recent successful insert. The pair makes
/// depth-first enumeration of column subsets cost one reduction per node.
/// For p = 2 vectors are bit-packed.
class ModularEchelon {
public:
    /// The modulus may be any prime below 2^62.
    ModularEchelon(std::size_t dimension, std::uint64_t prime);

    std::size_t dimension() const { return dimension_; }
    std::size_t rank() const { return pivots_.size(); }

    /// Entries may be any integers; they are reduced mod p.
    bool insert(std::span<const std::int64_t> vector);
    void pop();

private:
    std::size_t dimension_;
    std::uint64_t prime_;
    std::size_t words_;
    std::vector<std::size_t> pivots_;
    // Row t of the basis occupies one stride of this buffer; basis vector t is
    // zero at the pivots of vectors inserted before it, with a unit pivot.
    std::vector<std::uint64_t> storage_;
    std::vector<std::uint64_t> scratch_;
};

} // namespace rmac

#endif

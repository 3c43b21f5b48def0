#ifndef RMAC_VERTEX_SET_HPP
#define RMAC_VERTEX_SET_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace rmac {

inline constexpr int kMaxVertices = 64;

/// A set of vertex labels 1..64 packed into a bitmask (label v is bit v-1).
/// Used both for simplices and for vertex subsets J.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
    VertexSet(std::initializer_list<int> labels)
    {
        for (int v : labels)
            insert(v);
    }

    /// Throws std::invalid_argument on labels outside 1..64 or repeated labels.
    static VertexSet from_labels(const std::vector<int>& labels)
    {
        VertexSet s;
        for (int v : labels) {
            if (v < 1 || v > kMaxVertices)
                throw std::invalid_argument("vertex label " + std::to_string(v) + " out of range");
            if (s.contains(v))
                throw std::invalid_argument("duplicate vertex " + std::to_string(v));
            s.insert(v);
        }
        return s;
    }

    /// {1..n}
    static constexpr VertexSet range(int n)
    {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool contains(int v) const { return (bits_ >> (v - 1)) & 1u; }
    constexpr bool subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    /// Largest label present, 0 when empty.
    constexpr int max_label() const { return 64 - std::countl_zero(bits_); }

    void insert(int v) { bits_ |= std::uint64_t{1} << (v - 1); }
    constexpr VertexSet without(int v) const { return VertexSet(bits_ & ~(std::uint64_t{1} << (v - 1))); }

    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }

    /// Sorted labels.
    std::vector<int> labels() const
    {
        std::vector<int> out;
        out.reserve(size());
        for (std::uint64_t b = bits_; b != 0; b &= b - 1)
            out.push_back(std::countr_zero(b) + 1);
        return out;
    }

    friend constexpr bool operator==(VertexSet, VertexSet) = default;
    /// Numeric order on the masks, which is colexicographic order on sorted tuples.
    friend constexpr auto operator<=>(VertexSet a, VertexSet b) { return a.bits_ <=> b.bits_; }

private:
    std::uint64_t bits_ = 0;
};

/// Lexicographic order on sorted label tuples (a proper prefix sorts first).
constexpr bool lex_less(VertexSet a, VertexSet b)
{
    std::uint64_t diff = a.bits() ^ b.bits();
    if (diff == 0)
        return false;
    // Below the lowest differing label both tuples share a common prefix.
    std::uint64_t lowest = diff & (~diff + 1);
    std::uint64_t above = ~((lowest << 1) - 1);
    if (a.bits() & lowest)
        return (b.bits() & above) != 0;
    return (a.bits() & above) == 0;
}

} // namespace rmac

#endif

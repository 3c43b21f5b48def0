#ifndef RMAC_COMBINATORICS_HPP
#define RMAC_COMBINATORICS_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "rmac/vertex_set.hpp"

namespace rmac {

/// C(n, k) in 64 bits; throws std::overflow_error if it does not fit.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    unsigned __int128 result = 1;
    for (std::uint64_t t = 1; t <= k; ++t) {
        result = result * (n - k + t) / t;
        if (result > UINT64_MAX)
            throw std::overflow_error("binomial coefficient exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(result);
}

/// Next mask with the same popcount (Gosper); 0 once the 64-bit range is exhausted.
constexpr std::uint64_t next_combination(std::uint64_t mask)
{
    const std::uint64_t low = mask & (~mask + 1);
    const std::uint64_t ripple = mask + low;
    if (ripple == 0)
        return 0;
    return (((ripple ^ mask) >> 2) / low) | ripple;
}

/// All k-subsets of {1..n} in colexicographic (increasing mask) order.
inline std::vector<VertexSet> k_subsets(int n, int k)
{
    std::vector<VertexSet> out;
    if (k < 0 || k > n)
        return out;
    if (k == 0) {
        out.emplace_back();
        return out;
    }
    const std::uint64_t limit = VertexSet::range(n).bits();
    for (std::uint64_t mask = VertexSet::range(k).bits(); mask != 0 && (mask & ~limit) == 0;
         mask = next_combination(mask))
        out.emplace_back(mask);
    return out;
}

} // namespace rmac

#endif

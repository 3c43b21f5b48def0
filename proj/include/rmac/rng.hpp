#ifndef RMAC_RNG_HPP
#define RMAC_RNG_HPP

#include <cstdint>

namespace rmac::rng {

/// SplitMix64 increment (the 64-bit golden ratio).
inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
/// Salt separating trial-index hashing from the variate stream.
inline constexpr std::uint64_t kTrialSalt = 0xD1B54A32D192ED03ULL;

/// SplitMix64 output finalizer (Stafford variant 13).
constexpr std::uint64_t mix64(std::uint64_t z)
{
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// The index-th output (0-based) of a SplitMix64 generator whose state starts at seed.
constexpr std::uint64_t splitmix64_at(std::uint64_t seed, std::uint64_t index)
{
    return mix64(seed + (index + 1) * kGolden);
}

/// Uniform double in [0, 1) with 53 random bits, from splitmix64_at(seed, index).
constexpr double uniform_at(std::uint64_t seed, std::uint64_t index)
{
    return static_cast<double>(splitmix64_at(seed, index) >> 11) * 0x1.0p-53;
}

/// Seed of the trial-th substream of a master seed.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial);

} // namespace rmac::rng

#endif

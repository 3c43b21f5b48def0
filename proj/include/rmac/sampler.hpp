#ifndef RMAC_SAMPLER_HPP
#define RMAC_SAMPLER_HPP

#include <cstdint>

#include "rmac/complex.hpp"

namespace rmac {

/// Parameters of one Linial-Meshulam sample Y^d(n, p).
struct LMParams {
    int n = 1;
    int d = 1;
    double p = 0.5;
    std::uint64_t seed = 0;

    /// Throws std::invalid_argument unless 1 <= d <= n-1, n <= 64 and 0 <= p <= 1.
    void validate() const;
};

/// Full (d-1)-skeleton on n vertices plus each d-simplex independently with
/// probability p.
///
/// Candidates are visited in colexicographic order; candidate c is kept iff
/// rng::uniform_at(seed, c) < p. Samples for the same seed are therefore
/// nested as p grows, and bit-identical across platforms.
SimplicialComplex sample_lm(const LMParams& params);

/// sample_lm with seed replaced by rng::trial_seed(params.seed, trial).
SimplicialComplex sample_stream(const LMParams& params, std::uint64_t trial);

} // namespace rmac

#endif

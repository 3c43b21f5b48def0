#include "rmac/sampler.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "rmac/combinatorics.hpp"
#include "rmac/rng.hpp"

namespace rmac {

void LMParams::validate() const
{
    if (n < 1 || n > kMaxVertices)
        throw std::invalid_argument("n must lie in 1..64, got " + std::to_string(n));
    if (d < 1 || d > n - 1)
        throw std::invalid_argument("d must lie in 1..n-1, got d=" + std::to_string(d) +
                                    " for n=" + std::to_string(n));
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("p must lie in [0, 1]");
}

SimplicialComplex sample_lm(const LMParams& params)
{
    params.validate();
    std::vector<std::vector<VertexSet>> buckets;
    buckets.reserve(static_cast<std::size_t>(params.d + 1));
    for (int size = 1; size <= params.d; ++size)
        buckets.push_back(k_subsets(params.n, size));

    std::vector<VertexSet> top;
    std::uint64_t index = 0;
    for (VertexSet candidate : k_subsets(params.n, params.d + 1)) {
        if (rng::uniform_at(params.seed, index++) < params.p)
            top.push_back(candidate);
    }
    buckets.push_back(std::move(top));
    return SimplicialComplex(params.n, std::move(buckets));
}

SimplicialComplex sample_stream(const LMParams& params, std::uint64_t trial)
{
    LMParams derived = params;
    derived.seed = rng::trial_seed(params.seed, trial);
    return sample_lm(derived);
}

} // namespace rmac

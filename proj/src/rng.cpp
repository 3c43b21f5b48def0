#include "rmac/rng.hpp"

namespace rmac::rng {

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial)
{
    return mix64(master ^ mix64(trial + kTrialSalt));
}

} // namespace rmac::rng

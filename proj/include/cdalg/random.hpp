#pragma once

#include <cstdint>
#include <random>

#include "cdalg/element.hpp"

namespace cd {

/// SplitMix64 finalizer; used to derive independent per-trial seeds.
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t counter) noexcept {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (counter + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

using Rng = std::mt19937_64;

inline Rng trial_rng(std::uint64_t seed, std::uint64_t trial) { return Rng(mix_seed(seed, trial)); }

/// Coefficients uniform in [lo, hi].
Element random_element(Rng& rng, int level, double lo = -1.0, double hi = 1.0);
/// Uniform in [-1, 1] with the real part zeroed.
Element random_pure(Rng& rng, int level);
/// Uniform on the unit sphere of Im(A_n) (needs level >= 1).
Element random_unit_pure(Rng& rng, int level);

}  // namespace cd

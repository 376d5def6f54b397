#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cdalg/structure.hpp"

namespace cd::suite {

struct CheckResult {
    std::string name;
    bool passed = false;
    double max_residual = 0.0;
    double tolerance = 0.0;
};

/// Randomized identity checks at one level (conjugation, norms, power laws,
/// exp/log/root round trips, kernel equivalence, slice closure). Deterministic
/// in (level, trials, seed).
std::vector<CheckResult> run_invariants(int level, int trials, std::uint64_t seed);

/// law_profile verdicts compared against the expected classification.
std::vector<CheckResult> classify(const LawProfile& profile);

}  // namespace cd::suite

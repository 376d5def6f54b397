#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cdalg/element.hpp"

namespace cd {

inline constexpr double kDefaultAngularTol = 1e-8;

struct DependenceReport {
    bool dependent = false;
    /// Smallest principal angle between the imaginary parts, in [0, pi/2].
    /// Zero when either element is real.
    double margin = 0.0;
};

/// C-dependence: the pure imaginary parts are linearly dependent.
DependenceReport is_c_dependent(const Element& x, const Element& y,
                                double angular_tol = kDefaultAngularTol);

struct CentralizerReport {
    int level = 0;
    Element element;
    /// dim {b in Im(A_n) : ab = ba}
    std::size_t centralizer_dim = 0;
    /// dim Ker L_a (right annihilator of a)
    std::size_t kernel_dim = 0;
    bool decomposition_ok = false;
};

/// Throws NotPure or ZeroElement.
CentralizerReport centralizer_report(const Element& a, double rank_tol = 1e-10);

struct ZeroDivisorPair {
    Element u;
    Element v;
    double product_norm = 0.0;
};

/// First pair (e_i + s e_j, e_k + t e_l) of pure two-term elements with
/// u v = 0, enumerated as i < j, s in {+1,-1}, then k < l, t in {+1,-1}.
std::optional<ZeroDivisorPair> find_zero_divisor_pair(int level);

/// All such pairs, up to `limit` of them, in enumeration order.
std::vector<ZeroDivisorPair> zero_divisor_pairs(int level, std::size_t limit);

enum class Verdict { pass, fail, inconclusive };
std::string_view to_string(Verdict v) noexcept;

struct LawResult {
    std::string name;
    Verdict verdict = Verdict::inconclusive;
    /// Largest residual over all trials, normalized by the natural scale
    /// (product of operand norms) of each identity.
    double max_residual = 0.0;
};

struct LawProfile {
    int level = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    std::vector<LawResult> laws;  // commutative, associative, alternative, normed, flexible, power_associative

    const LawResult& get(std::string_view name) const;
};

inline constexpr double kLawPassTol = 1e-9;
inline constexpr double kLawFailTol = 1e-6;

/// Randomized check of the six algebra laws. Trial t draws its operands from
/// a generator seeded by (seed, t), so the profile depends only on the inputs.
LawProfile law_profile(int level, int trials, std::uint64_t seed);

/// Expected verdicts for the classical tower: commutative n <= 1,
/// associative n <= 2, alternative and normed n <= 3, flexible and
/// power-associative always.
bool law_expected(std::string_view name, int level);

}  // namespace cd

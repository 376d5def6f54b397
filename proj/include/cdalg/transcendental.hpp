#pragma once

#include <optional>

#include "cdalg/element.hpp"

namespace cd {

/// x = magnitude * (cos(angle) e0 + sin(angle) direction), angle in [0, pi].
/// When x is a real multiple of e0 the direction is undefined: it is stored as
/// zero and `degenerate` is set (angle 0 for positive, pi for negative reals).
struct PolarForm {
    double magnitude = 0.0;
    double angle = 0.0;
    Element direction;
    bool degenerate = false;

    Element reconstruct() const;
};

/// exp on Im(A_n): cos(|a|) e0 + sin(|a|) a/|a|. Throws NotPure.
Element exp_pure(const Element& a);

/// exp(r e0 + a) = e^r exp(a). Throws Overflow when e^r is not representable.
Element exp(const Element& x);

PolarForm to_polar(const Element& x);

/// Principal logarithm: ln|x| e0 + angle * direction. A negative real has no
/// principal direction; `fallback_dir` (a nonzero pure element, normalized
/// here) supplies one, otherwise NoPrincipalDirection is thrown.
Element log_principal(const Element& x, const std::optional<Element>& fallback_dir = std::nullopt);

/// Principal k-th root through the polar form: |x|^{1/k} exp((angle/k) direction).
Element k_root(const Element& x, int k, const std::optional<Element>& fallback_dir = std::nullopt);

/// |x|^{1/k} exp(a/k) with a the raw imaginary part of x. Only a k-th root
/// when |a| happens to equal the polar angle; exposed for comparison.
Element k_root_literal(const Element& x, int k);

/// x -> k x.
Element scale_map(const Element& x, int k);

}  // namespace cd

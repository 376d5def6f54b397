#include "cdalg/transcendental.hpp"

#include <cmath>
#include <numbers>

namespace cd {

namespace {

constexpr double kSmallAngle = 1e-4;

// sin(t)/t, Taylor branch near zero.
double sinc(double t) {
    if (t < kSmallAngle) {
        const double t2 = t * t;
        return 1.0 - t2 / 6.0 + t2 * t2 / 120.0;
    }
    return std::sin(t) / t;
}

Element unit_direction(const Element& dir) {
    if (!is_pure(dir)) throw Error(ErrorKind::NotPure, "direction must be pure imaginary");
    const double n = norm(dir);
    if (n <= zero_threshold(dir.coeffs())) throw Error(ErrorKind::ZeroElement, "direction is zero");
    Element u = (1.0 / n) * split(dir).imag;
    return u;
}

}  // namespace

Element PolarForm::reconstruct() const {
    Element out = std::sin(angle) * direction;
    out += Element::real(direction.level(), std::cos(angle));
    return magnitude * out;
}

Element exp_pure(const Element& a) {
    if (!is_pure(a)) throw Error(ErrorKind::NotPure, "exp_pure needs a pure imaginary argument");
    Element out = split(a).imag;
    const double t = norm(out);
    out *= sinc(t);
    out += Element::real(a.level(), std::cos(t));
    return out;
}

Element exp(const Element& x) {
    const auto [r, a] = split(x);
    const double scale = std::exp(r);
    if (!std::isfinite(scale)) throw Error(ErrorKind::Overflow, "e^r overflows for r = " + std::to_string(r));
    return scale * exp_pure(a);
}

PolarForm to_polar(const Element& x) {
    if (is_zero(x)) throw Error(ErrorKind::ZeroElement, "polar form of zero");
    PolarForm p;
    p.magnitude = norm(x);
    const auto [s, b] = split(x);
    const double nb = norm(b);
    if (nb <= 1e-12 * p.magnitude) {
        p.degenerate = true;
        p.angle = s > 0.0 ? 0.0 : std::numbers::pi;
        p.direction = Element::zero(x.level());
    } else {
        p.angle = std::atan2(nb, s);
        p.direction = (1.0 / nb) * b;
    }
    return p;
}

namespace {

// Polar form with the fallback direction filled in for negative reals.
PolarForm principal_polar(const Element& x, const std::optional<Element>& fallback_dir) {
    PolarForm p = to_polar(x);
    if (p.degenerate && p.angle > 0.0) {
        if (!fallback_dir)
            throw Error(ErrorKind::NoPrincipalDirection,
                        "negative real has no principal direction; supply a fallback");
        require_same_level(x, *fallback_dir);
        p.direction = unit_direction(*fallback_dir);
    }
    return p;
}

}  // namespace

Element log_principal(const Element& x, const std::optional<Element>& fallback_dir) {
    const PolarForm p = principal_polar(x, fallback_dir);
    Element out = p.angle * p.direction;
    out += Element::real(x.level(), std::log(p.magnitude));
    return out;
}

Element k_root(const Element& x, int k, const std::optional<Element>& fallback_dir) {
    if (k < 1) throw Error(ErrorKind::InvalidArgument, "k_root needs k >= 1");
    const PolarForm p = principal_polar(x, fallback_dir);
    return std::pow(p.magnitude, 1.0 / k) * exp_pure((p.angle / k) * p.direction);
}

Element k_root_literal(const Element& x, int k) {
    if (k < 1) throw Error(ErrorKind::InvalidArgument, "k_root needs k >= 1");
    if (is_zero(x)) throw Error(ErrorKind::ZeroElement, "root of zero");
    return std::pow(norm(x), 1.0 / k) * exp_pure((1.0 / k) * split(x).imag);
}

Element scale_map(const Element& x, int k) { return static_cast<double>(k) * x; }

}  // namespace cd

#include "cdalg/element.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>

#include "cdalg/kernels.hpp"

namespace cd {

namespace {

std::atomic<int> g_max_level{kDefaultMaxLevel};

std::string level_str(int n) { return std::to_string(n); }

}  // namespace

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::NonFinite: return "NonFinite";
        case ErrorKind::LevelMismatch: return "LevelMismatch";
        case ErrorKind::LevelOutOfRange: return "LevelOutOfRange";
        case ErrorKind::ZeroElement: return "ZeroElement";
        case ErrorKind::NotPure: return "NotPure";
        case ErrorKind::NoPrincipalDirection: return "NoPrincipalDirection";
        case ErrorKind::NotInSlice: return "NotInSlice";
        case ErrorKind::OffSlice: return "OffSlice";
        case ErrorKind::Overflow: return "Overflow";
        case ErrorKind::NoConvergence: return "NoConvergence";
        case ErrorKind::OriginOnPath: return "OriginOnPath";
        case ErrorKind::AmbiguousWinding: return "AmbiguousWinding";
        case ErrorKind::OpenCurve: return "OpenCurve";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

int max_level() noexcept { return g_max_level.load(std::memory_order_relaxed); }

void set_max_level(int level) {
    if (level < 0 || level > kHardMaxLevel)
        throw Error(ErrorKind::LevelOutOfRange,
                    "max level must lie in [0, " + level_str(kHardMaxLevel) + "]");
    g_max_level.store(level, std::memory_order_relaxed);
}

double zero_threshold(std::span<const double> coeffs) noexcept {
    double m = 0.0;
    for (double c : coeffs) m = std::max(m, std::abs(c));
    return 1e-12 * std::max(1.0, m);
}

Element::Element(int level, std::vector<double> coeffs) : level_(level), coeffs_(std::move(coeffs)) {
    if (level < 0 || level > max_level())
        throw Error(ErrorKind::LevelOutOfRange,
                    "level " + level_str(level) + " outside [0, " + level_str(max_level()) + "]");
    const std::size_t want = std::size_t{1} << level;
    if (coeffs_.size() != want)
        throw Error(ErrorKind::LengthMismatch, "level " + level_str(level) + " needs " +
                                                   std::to_string(want) + " coefficients, got " +
                                                   std::to_string(coeffs_.size()));
    for (double c : coeffs_)
        if (!std::isfinite(c)) throw Error(ErrorKind::NonFinite, "coefficient is NaN or infinite");
}

Element make_unchecked(int level, std::vector<double> coeffs) {
    return Element(Element::Unchecked{}, level, std::move(coeffs));
}

Element make_element(int level, std::vector<double> coeffs) { return Element(level, std::move(coeffs)); }

Element make_element(int level, std::initializer_list<double> coeffs) {
    return Element(level, std::vector<double>(coeffs));
}

Element Element::zero(int level) {
    if (level < 0 || level > kHardMaxLevel)
        throw Error(ErrorKind::LevelOutOfRange, "level " + level_str(level));
    return make_unchecked(level, std::vector<double>(std::size_t{1} << level, 0.0));
}

Element Element::basis(int level, std::size_t index) {
    Element e = zero(level);
    if (index >= e.dim())
        throw Error(ErrorKind::InvalidArgument,
                    "basis index " + std::to_string(index) + " out of range at level " + level_str(level));
    e.coeffs_[index] = 1.0;
    return e;
}

Element Element::real(int level, double r) {
    Element e = zero(level);
    e.coeffs_[0] = r;
    return e;
}

void require_same_level(const Element& x, const Element& y) {
    if (x.level() != y.level())
        throw Error(ErrorKind::LevelMismatch,
                    "levels " + level_str(x.level()) + " and " + level_str(y.level()));
}

Element& Element::operator+=(const Element& rhs) {
    require_same_level(*this, rhs);
    kernels::axpy(1.0, rhs.coeffs_, coeffs_);
    return *this;
}

Element& Element::operator-=(const Element& rhs) {
    require_same_level(*this, rhs);
    kernels::axpy(-1.0, rhs.coeffs_, coeffs_);
    return *this;
}

Element& Element::operator*=(double s) {
    for (double& c : coeffs_) c *= s;
    return *this;
}

Element operator+(Element x, const Element& y) { return x += y; }
Element operator-(Element x, const Element& y) { return x -= y; }
Element operator-(Element x) { return x *= -1.0; }
Element operator*(double s, Element x) { return x *= s; }
Element operator*(Element x, double s) { return x *= s; }

Element multiply(const Element& x, const Element& y) {
    require_same_level(x, y);
    std::vector<double> out(x.dim());
    kernels::multiply(x.level(), x.coeffs(), y.coeffs(), out);
    return make_unchecked(x.level(), std::move(out));
}

namespace {

// Literal doubling recursion on coefficient spans; out has x.size() slots.
void recursive_product(std::span<const double> x, std::span<const double> y, std::span<double> out);

void recursive_conj(std::span<const double> x, std::span<double> out) {
    if (x.size() == 1) {
        out[0] = x[0];
        return;
    }
    const std::size_t h = x.size() / 2;
    recursive_conj(x.first(h), out.first(h));
    for (std::size_t i = h; i < x.size(); ++i) out[i] = -x[i];
}

void recursive_product(std::span<const double> x, std::span<const double> y, std::span<double> out) {
    const std::size_t d = x.size();
    if (d == 1) {
        out[0] = x[0] * y[0];
        return;
    }
    const std::size_t h = d / 2;
    const auto a = x.first(h), b = x.last(h);
    const auto c = y.first(h), e = y.last(h);
    std::vector<double> conj_c(h), conj_e(h), t1(h), t2(h);
    recursive_conj(c, conj_c);
    recursive_conj(e, conj_e);
    // first = a c - conj(e) b
    recursive_product(a, c, t1);
    recursive_product(conj_e, b, t2);
    for (std::size_t i = 0; i < h; ++i) out[i] = t1[i] - t2[i];
    // second = e a + b conj(c)
    recursive_product(e, a, t1);
    recursive_product(b, conj_c, t2);
    for (std::size_t i = 0; i < h; ++i) out[h + i] = t1[i] + t2[i];
}

}  // namespace

Element reference_multiply(const Element& x, const Element& y) {
    require_same_level(x, y);
    std::vector<double> out(x.dim());
    recursive_product(x.coeffs(), y.coeffs(), out);
    return make_unchecked(x.level(), std::move(out));
}

Element conjugate(const Element& x) {
    std::vector<double> c(x.coeffs().begin(), x.coeffs().end());
    for (std::size_t i = 1; i < c.size(); ++i) c[i] = -c[i];
    return make_unchecked(x.level(), std::move(c));
}

Element reference_conjugate(const Element& x) {
    std::vector<double> out(x.dim());
    recursive_conj(x.coeffs(), out);
    return make_unchecked(x.level(), std::move(out));
}

double inner(const Element& x, const Element& y) {
    require_same_level(x, y);
    return kernels::dot(x.coeffs(), y.coeffs());
}

double norm_sq(const Element& x) { return kernels::dot(x.coeffs(), x.coeffs()); }

double norm(const Element& x) { return std::sqrt(norm_sq(x)); }

double max_abs(const Element& x) noexcept {
    double m = 0.0;
    for (double c : x.coeffs()) m = std::max(m, std::abs(c));
    return m;
}

Split split(const Element& x) {
    std::vector<double> c(x.coeffs().begin(), x.coeffs().end());
    const double r = c[0];
    c[0] = 0.0;
    return {r, make_unchecked(x.level(), std::move(c))};
}

bool is_zero(const Element& x) noexcept { return norm(x) <= zero_threshold(x.coeffs()); }

bool is_pure(const Element& x) noexcept {
    return std::abs(x.real_part()) <= 1e-12 * std::max(1.0, norm(x));
}

Element inverse(const Element& x) {
    if (is_zero(x)) throw Error(ErrorKind::ZeroElement, "inverse of zero");
    return (1.0 / norm_sq(x)) * conjugate(x);
}

Element power_int(const Element& x, int k) {
    if (k == 0) {
        if (is_zero(x)) throw Error(ErrorKind::ZeroElement, "zeroth power of zero");
        return Element::real(x.level(), 1.0);
    }
    if (k < 0) return power_int(inverse(x), -k);
    Element p = x;
    for (int m = 2; m <= k; ++m) p = multiply(x, p);
    return p;
}

Element embed_up(const Element& x, const Element& second) {
    require_same_level(x, second);
    if (x.level() + 1 > kHardMaxLevel)
        throw Error(ErrorKind::LevelOutOfRange, "cannot embed above level " + level_str(kHardMaxLevel));
    std::vector<double> c;
    c.reserve(2 * x.dim());
    c.insert(c.end(), x.coeffs().begin(), x.coeffs().end());
    c.insert(c.end(), second.coeffs().begin(), second.coeffs().end());
    return make_unchecked(x.level() + 1, std::move(c));
}

Element embed_up(const Element& x, double r) { return embed_up(x, Element::real(x.level(), r)); }

Element commutator(const Element& x, const Element& y) { return x * y - y * x; }

Element associator(const Element& x, const Element& y, const Element& z) {
    return (x * y) * z - x * (y * z);
}

}  // namespace cd

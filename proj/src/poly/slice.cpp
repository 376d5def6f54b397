#include <algorithm>
#include <cmath>

#include "cdalg/poly.hpp"
#include "cdalg/structure.hpp"

namespace cd::poly {

ComplexSlice ComplexSlice::from_direction(const Element& direction) {
    if (direction.level() < 1) throw Error(ErrorKind::InvalidArgument, "A_0 has no imaginary directions");
    if (!is_pure(direction)) throw Error(ErrorKind::NotPure, "slice direction must be pure imaginary");
    const double n = norm(direction);
    if (n <= zero_threshold(direction.coeffs())) throw Error(ErrorKind::ZeroElement, "slice direction is zero");
    return ComplexSlice((1.0 / n) * split(direction).imag);
}

ComplexSlice ComplexSlice::basis(int level, std::size_t index) {
    if (index == 0) throw Error(ErrorKind::NotPure, "e0 is not a slice direction");
    return from_direction(Element::basis(level, index));
}

Element slice_embed(Complex z, const ComplexSlice& slice) {
    Element out = z.imag() * slice.direction();
    out += Element::real(slice.level(), z.real());
    return out;
}

Complex slice_project(const Element& x, const ComplexSlice& slice) {
    require_same_level(x, slice.direction());
    const double u = x.real_part();
    const double v = inner(x, slice.direction());
    const double off = norm(x - slice_embed(Complex(u, v), slice));
    if (off > 1e-9 * norm(x))
        throw Error(ErrorKind::NotInSlice, "element has off-plane part of norm " + std::to_string(off));
    return {u, v};
}

ComplexPolynomial::ComplexPolynomial(ComplexSlice slice, std::vector<Complex> lower)
    : slice_(std::move(slice)), coeffs_(std::move(lower)) {
    if (coeffs_.empty()) throw Error(ErrorKind::InvalidArgument, "polynomial degree must be >= 1");
    for (const auto& c : coeffs_)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
            throw Error(ErrorKind::NonFinite, "polynomial coefficient is not finite");
}

ComplexPolynomial ComplexPolynomial::normalized(ComplexSlice slice, std::vector<Complex> all) {
    if (all.size() < 2) throw Error(ErrorKind::InvalidArgument, "polynomial degree must be >= 1");
    const Complex lead = all.back();
    if (std::abs(lead) == 0.0) throw Error(ErrorKind::ZeroElement, "leading coefficient is zero");
    all.pop_back();
    for (auto& c : all) c /= lead;
    return ComplexPolynomial(std::move(slice), std::move(all));
}

double ComplexPolynomial::scale() const noexcept {
    double s = 1.0;
    for (const auto& c : coeffs_) s = std::max(s, std::abs(c));
    return s;
}

Element eval_complex_poly_unchecked(const ComplexPolynomial& p, const Element& x) {
    require_same_level(x, p.slice().direction());
    Element acc = Element::real(x.level(), 1.0);
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        acc = acc * x;
        acc += p.coeff_element(i);
    }
    return acc;
}

Element eval_complex_poly(const ComplexPolynomial& p, const Element& x) {
    require_same_level(x, p.slice().direction());
    if (!is_c_dependent(x, p.slice().direction()).dependent)
        throw Error(ErrorKind::OffSlice, "argument is not C-dependent with the slice direction");
    return eval_complex_poly_unchecked(p, x);
}

}  // namespace cd::poly

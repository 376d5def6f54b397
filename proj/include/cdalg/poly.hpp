#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "cdalg/element.hpp"

namespace cd::poly {

using Complex = std::complex<double>;

/// The plane Span{e0, a} for a unit pure imaginary a; a copy of C inside A_n.
class ComplexSlice {
public:
    /// Normalizes `direction`. Throws NotPure or ZeroElement.
    static ComplexSlice from_direction(const Element& direction);
    static ComplexSlice basis(int level, std::size_t index);

    int level() const noexcept { return dir_.level(); }
    const Element& direction() const noexcept { return dir_; }

private:
    explicit ComplexSlice(Element dir) : dir_(std::move(dir)) {}
    Element dir_;
};

/// u e0 + v a.
Element slice_embed(Complex z, const ComplexSlice& slice);
inline Element slice_embed(double u, double v, const ComplexSlice& slice) {
    return slice_embed(Complex(u, v), slice);
}

/// (<x, e0>, <x, a>). Throws NotInSlice when the part of x off the plane
/// exceeds 1e-9 ||x||.
Complex slice_project(const Element& x, const ComplexSlice& slice);

/// Monic x^k + xi_{k-1} x^{k-1} + ... + xi_0 with every xi_i in the slice.
class ComplexPolynomial {
public:
    /// `lower` holds xi_0 .. xi_{k-1}; the leading coefficient is 1.
    ComplexPolynomial(ComplexSlice slice, std::vector<Complex> lower);

    /// `all` holds c_0 .. c_k with c_k != 0; divides through by c_k.
    static ComplexPolynomial normalized(ComplexSlice slice, std::vector<Complex> all);

    const ComplexSlice& slice() const noexcept { return slice_; }
    int level() const noexcept { return slice_.level(); }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()); }
    std::span<const Complex> coeffs() const noexcept { return coeffs_; }
    /// xi_i as an element of A_n.
    Element coeff_element(std::size_t i) const { return slice_embed(coeffs_[i], slice_); }
    /// max(1, max |xi_i|)
    double scale() const noexcept;

private:
    ComplexSlice slice_;
    std::vector<Complex> coeffs_;
};

/// Horner evaluation. x must be C-dependent with the slice direction (or real);
/// otherwise OffSlice is thrown.
Element eval_complex_poly(const ComplexPolynomial& p, const Element& x);
/// Same bracketing (Horner) without the C-dependence check.
Element eval_complex_poly_unchecked(const ComplexPolynomial& p, const Element& x);

struct RootOptions {
    int max_iterations = 200;
    /// Residual bound factor: |p(root)| <= residual_factor * scale.
    double residual_factor = 1e-8;
};

/// All k roots of a monic complex polynomial (coefficients c_0..c_{k-1}),
/// Aberth-Ehrlich with a Durand-Kerner fallback. Throws NoConvergence.
std::vector<Complex> complex_roots(std::span<const Complex> lower, const RootOptions& opts = {});

/// Roots in A_n with multiplicity (exactly `degree` of them).
std::vector<Element> roots_complex_poly(const ComplexPolynomial& p, const RootOptions& opts = {});

/// coeff * x^exponent.
struct Term {
    Element coeff;
    int exponent;
};

/// p(x) = x^k (e0 + g(x)), ||g(x)|| -> 0 as ||x|| -> inf.
struct GeneralizedPolynomial {
    int level = 0;
    int degree = 1;
    std::function<Element(const Element&)> g;
    /// Residual scale used by the root search tolerance.
    double scale = 1.0;
    /// Symbolic form of g when it is a sum of terms; empty for opaque g.
    std::vector<Term> terms;

    /// g(x) = sum coeff_i * x^{exponent_i}. Throws InvalidArgument for an empty
    /// list (g constant), a non-negative exponent, or degree < 1.
    static GeneralizedPolynomial from_terms(int level, int degree, std::vector<Term> terms);
};

/// g(x) = xi_0 x^{-k} + xi_1 x^{-k+1} + ... + xi_{k-1} x^{-1}.
GeneralizedPolynomial to_generalized(const ComplexPolynomial& p);

/// power_int(x, k) * (e0 + g(x)). Throws ZeroElement.
Element eval_generalized(const GeneralizedPolynomial& p, const Element& x);

struct DecayReport {
    std::vector<double> radii;
    std::vector<double> max_norm;  // max ||g|| on each sphere
    bool monotone_decreasing = true;
};

DecayReport check_decay(const GeneralizedPolynomial& p, std::span<const double> radii, int samples,
                        std::uint64_t seed = 0);

/// Total signed turns of a closed loop, before rounding. Throws OpenCurve,
/// OriginOnPath, or AmbiguousWinding (angular step reaching pi).
double winding_turns(std::span<const Complex> samples);
/// winding_turns rounded; AmbiguousWinding unless within 0.05 of an integer.
int winding_number(std::span<const Complex> samples);

/// Winding of f restricted to the unit circle of the slice, computed in full
/// A_n arithmetic and projected back (NotInSlice if f leaves the plane).
int slice_map_winding(const std::function<Element(const Element&)>& f, const ComplexSlice& slice,
                      int samples);
/// Winding of x -> x^k on the slice circle; equals k.
int power_map_winding(int k, const ComplexSlice& slice, int samples);

using ResidualFn = std::function<Element(const Element&)>;

struct SearchOptions {
    std::vector<double> radii{0.5, 1.0, 2.0, 4.0, 8.0};
    /// 0 selects 8 * 2^n.
    int starts_per_radius = 0;
    int max_iterations = 60;
    std::uint64_t seed = 0;
    /// 0 selects 1e-8 * scale.
    double tolerance = 0.0;
    /// Iterates are kept outside this ball around the origin.
    double exclusion_radius = 1e-6;
};

struct SearchResult {
    bool found = false;
    Element root;
    double residual = 0.0;
    /// Smallest residual seen at any evaluated point (starts and iterates).
    double best_residual = 0.0;
    Element best_point;
    int starts_used = 0;
    int iterations = 0;
};

/// Multistart damped Gauss-Newton on ||F(x)||^2 over R^{2^n}, central
/// difference Jacobian, Armijo step halving. Starts are taken in order
/// (radius, index) and the first start reaching the tolerance wins.
SearchResult root_search(const ResidualFn& f, int level, double scale, const SearchOptions& opts = {});

SearchResult root_search_generalized(const GeneralizedPolynomial& p, const SearchOptions& opts = {});

/// x -> [a, x] + e0. Not a generalized polynomial: its real part is always 1.
ResidualFn commutator_probe(const Element& a);

}  // namespace cd::poly

#pragma once

#include <string>
#include <string_view>

#include "cdalg/element.hpp"
#include "cdalg/poly.hpp"

namespace cd::io {

/// Decimal rendering with 17 significant digits (exact round trip).
std::string format_exact(double v);
/// Six significant digits, for human-readable output.
std::string format_short(double v);

/// {"level": n, "coeffs": [c0, ...]}. Throws Parse, LengthMismatch, NonFinite.
Element parse_element(std::string_view json);
std::string element_to_json(const Element& x);

/// {"level": n, "direction": [..], "coeffs": [[r0, s0], ...], "degree": k}
poly::ComplexPolynomial parse_complex_polynomial(std::string_view json);
std::string complex_polynomial_to_json(const poly::ComplexPolynomial& p);

/// {"level": n, "degree": k, "terms": [{"coeff": <element>, "exponent": e}, ...]}
poly::GeneralizedPolynomial parse_generalized_polynomial(std::string_view json);

/// Reads `@path` as a file, returns anything else verbatim.
std::string read_argument(std::string_view arg);

}  // namespace cd::io

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "cdalg/poly.hpp"

namespace cd::poly {

namespace {

struct Horner {
    Complex value;
    Complex derivative;
};

Horner horner(std::span<const Complex> lower, Complex z) {
    Complex p(1.0, 0.0), dp(0.0, 0.0);
    for (std::size_t i = lower.size(); i-- > 0;) {
        dp = dp * z + p;
        p = p * z + lower[i];
    }
    return {p, dp};
}

double root_radius(std::span<const Complex> lower) {
    double m = 0.0;
    for (const auto& c : lower) m = std::max(m, std::abs(c));
    return 1.0 + m;
}

std::vector<Complex> initial_guesses(std::size_t k, double radius) {
    std::vector<Complex> z(k);
    for (std::size_t j = 0; j < k; ++j)
        z[j] = std::polar(radius, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(k) + 0.4);
    return z;
}

bool aberth(std::span<const Complex> lower, std::vector<Complex>& z, int max_iter, double radius) {
    const std::size_t k = z.size();
    std::vector<Complex> corr(k);
    for (int it = 0; it < max_iter; ++it) {
        double biggest = 0.0;
        for (std::size_t j = 0; j < k; ++j) {
            const Horner h = horner(lower, z[j]);
            if (h.value == Complex(0.0, 0.0)) {
                corr[j] = 0.0;
                continue;
            }
            Complex s(0.0, 0.0);
            for (std::size_t m = 0; m < k; ++m)
                if (m != j && z[j] != z[m]) s += 1.0 / (z[j] - z[m]);
            const Complex denom = h.derivative / h.value - s;
            corr[j] = denom == Complex(0.0, 0.0) ? Complex(0.0, 0.0) : 1.0 / denom;
            biggest = std::max(biggest, std::abs(corr[j]));
        }
        for (std::size_t j = 0; j < k; ++j) z[j] -= corr[j];
        if (biggest <= 1e-14 * radius) return true;
    }
    return false;
}

bool durand_kerner(std::span<const Complex> lower, std::vector<Complex>& z, int max_iter, double radius) {
    const std::size_t k = z.size();
    for (int it = 0; it < max_iter; ++it) {
        double biggest = 0.0;
        for (std::size_t j = 0; j < k; ++j) {
            Complex q(1.0, 0.0);
            for (std::size_t m = 0; m < k; ++m)
                if (m != j) q *= z[j] - z[m];
            if (q == Complex(0.0, 0.0)) continue;
            const Complex c = horner(lower, z[j]).value / q;
            z[j] -= c;  // Gauss-Seidel update
            biggest = std::max(biggest, std::abs(c));
        }
        if (biggest <= 1e-14 * radius) return true;
    }
    return false;
}

double worst_residual(std::span<const Complex> lower, std::span<const Complex> z) {
    double w = 0.0;
    for (const auto& r : z) w = std::max(w, std::abs(horner(lower, r).value));
    return w;
}

}  // namespace

std::vector<Complex> complex_roots(std::span<const Complex> lower, const RootOptions& opts) {
    if (lower.empty()) throw Error(ErrorKind::InvalidArgument, "polynomial degree must be >= 1");
    const double radius = root_radius(lower);
    double scale = 1.0;
    for (const auto& c : lower) scale = std::max(scale, std::abs(c));
    const double bound = opts.residual_factor * scale;

    std::vector<Complex> z = initial_guesses(lower.size(), radius);
    aberth(lower, z, opts.max_iterations, radius);
    const double first = worst_residual(lower, z);
    if (first <= bound) return z;

    std::vector<Complex> dk = initial_guesses(lower.size(), radius);
    durand_kerner(lower, dk, 5 * opts.max_iterations, radius);
    const double second = worst_residual(lower, dk);
    if (second <= bound) return dk;

    std::ostringstream msg;
    msg << "root solver exhausted budget; best worst-case residuals aberth=" << first
        << " durand-kerner=" << second << " (bound " << bound << ")";
    throw Error(ErrorKind::NoConvergence, msg.str());
}

std::vector<Element> roots_complex_poly(const ComplexPolynomial& p, const RootOptions& opts) {
    const auto z = complex_roots(p.coeffs(), opts);
    const double bound = opts.residual_factor * p.scale();
    std::vector<Element> out;
    out.reserve(z.size());
    for (const auto& r : z) {
        Element root = slice_embed(r, p.slice());
        const double res = norm(eval_complex_poly(p, root));
        if (res > bound)
            throw Error(ErrorKind::NoConvergence,
                        "root residual " + std::to_string(res) + " exceeds bound in A_n arithmetic");
        out.push_back(std::move(root));
    }
    return out;
}

}  // namespace cd::poly

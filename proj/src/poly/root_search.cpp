#include <algorithm>
#include <cmath>
#include <limits>

#include "cdalg/linalg.hpp"
#include "cdalg/poly.hpp"
#include "cdalg/random.hpp"

namespace cd::poly {

namespace {

std::vector<unsigned> first_primes(std::size_t count) {
    std::vector<unsigned> primes;
    for (unsigned n = 2; primes.size() < count; ++n) {
        bool prime = true;
        for (unsigned p : primes) {
            if (p * p > n) break;
            if (n % p == 0) {
                prime = false;
                break;
            }
        }
        if (prime) primes.push_back(n);
    }
    return primes;
}

double radical_inverse(std::uint64_t index, unsigned base) {
    double inv = 1.0 / base, f = inv, r = 0.0;
    while (index > 0) {
        r += f * static_cast<double>(index % base);
        index /= base;
        f *= inv;
    }
    return r;
}

// Halton points with a seeded Cranley-Patterson shift, pushed onto the unit sphere.
class StartSequence {
public:
    StartSequence(std::size_t dim, std::uint64_t seed) : primes_(first_primes(dim)), shift_(dim) {
        Rng rng = trial_rng(seed, 0xC0FFEE);
        std::uniform_real_distribution<double> u(0.0, 1.0);
        for (double& s : shift_) s = u(rng);
    }

    std::vector<double> direction(std::uint64_t index) const {
        for (std::uint64_t attempt = 0;; ++attempt) {
            std::vector<double> v(primes_.size());
            double n2 = 0.0;
            for (std::size_t j = 0; j < v.size(); ++j) {
                double h = radical_inverse(index + 1 + attempt * 7919, primes_[j]) + shift_[j];
                h -= std::floor(h);
                v[j] = 2.0 * h - 1.0;
                n2 += v[j] * v[j];
            }
            if (n2 > 1e-6) {
                const double inv = 1.0 / std::sqrt(n2);
                for (double& x : v) x *= inv;
                return v;
            }
        }
    }

private:
    std::vector<unsigned> primes_;
    std::vector<double> shift_;
};

struct Evaluation {
    bool ok = false;
    Element value;
    double norm_sq = std::numeric_limits<double>::infinity();
};

Evaluation evaluate(const ResidualFn& f, const Element& x) {
    try {
        Element v = f(x);
        const double n2 = cd::norm_sq(v);
        if (!std::isfinite(n2)) return {};
        return {true, std::move(v), n2};
    } catch (const Error&) {
        return {};
    }
}

Element with_coeffs(int level, std::vector<double> c) { return make_unchecked(level, std::move(c)); }

}  // namespace

SearchResult root_search(const ResidualFn& f, int level, double scale, const SearchOptions& opts) {
    const std::size_t dim = std::size_t{1} << level;
    const int per_radius = opts.starts_per_radius > 0 ? opts.starts_per_radius : static_cast<int>(8 * dim);
    const double tol = opts.tolerance > 0.0 ? opts.tolerance : 1e-8 * scale;
    const StartSequence starts(dim, opts.seed);

    SearchResult res;
    res.best_residual = std::numeric_limits<double>::infinity();
    res.best_point = Element::zero(level);
    auto track = [&res](const Element& x, double n2) {
        const double r = std::sqrt(n2);
        if (r < res.best_residual) {
            res.best_residual = r;
            res.best_point = x;
        }
    };

    std::uint64_t start_index = 0;
    for (double radius : opts.radii) {
        for (int s = 0; s < per_radius; ++s, ++start_index) {
            ++res.starts_used;
            std::vector<double> xc = starts.direction(start_index);
            for (double& v : xc) v *= radius;
            Element x = with_coeffs(level, std::move(xc));
            Evaluation cur = evaluate(f, x);
            if (!cur.ok) continue;
            track(x, cur.norm_sq);

            for (int it = 0; it <= opts.max_iterations; ++it) {
                if (std::sqrt(cur.norm_sq) <= tol) {
                    res.found = true;
                    res.root = x;
                    res.residual = std::sqrt(cur.norm_sq);
                    return res;
                }
                if (it == opts.max_iterations) break;
                ++res.iterations;

                // Central-difference Jacobian.
                const double h = 1e-6 * (1.0 + norm(x));
                linalg::DenseMatrix jac(dim, dim);
                bool jac_ok = true;
                for (std::size_t j = 0; j < dim && jac_ok; ++j) {
                    std::vector<double> plus(x.coeffs().begin(), x.coeffs().end());
                    std::vector<double> minus = plus;
                    plus[j] += h;
                    minus[j] -= h;
                    const Evaluation fp = evaluate(f, with_coeffs(level, std::move(plus)));
                    const Evaluation fm = evaluate(f, with_coeffs(level, std::move(minus)));
                    if (!fp.ok || !fm.ok) {
                        jac_ok = false;
                        break;
                    }
                    for (std::size_t i = 0; i < dim; ++i) jac(i, j) = (fp.value[i] - fm.value[i]) / (2.0 * h);
                }
                if (!jac_ok) break;

                std::vector<double> rhs(dim);
                for (std::size_t i = 0; i < dim; ++i) rhs[i] = -cur.value[i];
                const double jn = jac.norm();
                const double mu = 1e-12 * std::max(1.0, jn * jn / static_cast<double>(dim));
                std::vector<double> step;
                try {
                    step = linalg::solve_least_squares(jac, rhs, mu);
                } catch (const Error&) {
                    break;
                }

                // Armijo step halving on ||F||^2 along the Gauss-Newton direction.
                bool accepted = false;
                double alpha = 1.0;
                for (int halving = 0; halving < 40; ++halving, alpha *= 0.5) {
                    std::vector<double> trial(x.coeffs().begin(), x.coeffs().end());
                    for (std::size_t i = 0; i < dim; ++i) trial[i] += alpha * step[i];
                    Element xt = with_coeffs(level, std::move(trial));
                    if (norm(xt) < opts.exclusion_radius) continue;
                    Evaluation ft = evaluate(f, xt);
                    if (!ft.ok) continue;
                    track(xt, ft.norm_sq);
                    if (ft.norm_sq <= (1.0 - 2e-4 * alpha) * cur.norm_sq) {
                        x = std::move(xt);
                        cur = std::move(ft);
                        accepted = true;
                        break;
                    }
                }
                if (!accepted) break;
            }
        }
    }
    res.residual = res.best_residual;
    return res;
}

SearchResult root_search_generalized(const GeneralizedPolynomial& p, const SearchOptions& opts) {
    return root_search([&p](const Element& x) { return eval_generalized(p, x); }, p.level, p.scale, opts);
}

}  // namespace cd::poly

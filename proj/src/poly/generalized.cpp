#include <algorithm>
#include <cmath>

#include "cdalg/poly.hpp"
#include "cdalg/random.hpp"

namespace cd::poly {

namespace {

Element sum_of_terms(const std::vector<Term>& terms, const Element& x) {
    Element g = Element::zero(x.level());
    for (const auto& t : terms) g += t.coeff * power_int(x, t.exponent);
    return g;
}

}  // namespace

GeneralizedPolynomial GeneralizedPolynomial::from_terms(int level, int degree, std::vector<Term> terms) {
    if (degree < 1) throw Error(ErrorKind::InvalidArgument, "generalized polynomial degree must be >= 1");
    if (terms.empty()) throw Error(ErrorKind::InvalidArgument, "g must be nonconstant (empty term list)");
    double scale = 1.0;
    for (const auto& t : terms) {
        if (t.coeff.level() != level) throw Error(ErrorKind::LevelMismatch, "term coefficient level");
        if (t.exponent >= 0)
            throw Error(ErrorKind::InvalidArgument,
                        "term exponent " + std::to_string(t.exponent) + " does not decay at infinity");
        scale = std::max(scale, norm(t.coeff));
    }
    GeneralizedPolynomial p;
    p.level = level;
    p.degree = degree;
    p.scale = scale;
    p.terms = std::move(terms);
    p.g = [terms = p.terms](const Element& x) { return sum_of_terms(terms, x); };
    return p;
}

GeneralizedPolynomial to_generalized(const ComplexPolynomial& p) {
    const int k = p.degree();
    GeneralizedPolynomial out;
    out.level = p.level();
    out.degree = k;
    out.scale = p.scale();
    for (int i = 0; i < k; ++i) out.terms.push_back({p.coeff_element(static_cast<std::size_t>(i)), i - k});
    out.g = [terms = out.terms](const Element& x) { return sum_of_terms(terms, x); };
    return out;
}

Element eval_generalized(const GeneralizedPolynomial& p, const Element& x) {
    if (x.level() != p.level) throw Error(ErrorKind::LevelMismatch, "argument level");
    if (is_zero(x)) throw Error(ErrorKind::ZeroElement, "generalized polynomial is undefined at 0");
    Element inner_factor = p.g(x);
    inner_factor += Element::real(x.level(), 1.0);
    return power_int(x, p.degree) * inner_factor;
}

DecayReport check_decay(const GeneralizedPolynomial& p, std::span<const double> radii, int samples,
                        std::uint64_t seed) {
    if (samples < 1) throw Error(ErrorKind::InvalidArgument, "samples must be positive");
    DecayReport rep;
    std::normal_distribution<double> gauss;
    for (std::size_t ri = 0; ri < radii.size(); ++ri) {
        const double r = radii[ri];
        if (!(r > 0.0)) throw Error(ErrorKind::InvalidArgument, "radii must be positive");
        Rng rng = trial_rng(seed, ri);
        double worst = 0.0;
        for (int s = 0; s < samples; ++s) {
            std::vector<double> c(std::size_t{1} << p.level);
            double n2 = 0.0;
            do {
                n2 = 0.0;
                for (double& v : c) {
                    v = gauss(rng);
                    n2 += v * v;
                }
            } while (n2 < 1e-12);
            const double f = r / std::sqrt(n2);
            for (double& v : c) v *= f;
            worst = std::max(worst, norm(p.g(make_unchecked(p.level, std::move(c)))));
        }
        if (!rep.max_norm.empty() && worst > rep.max_norm.back()) rep.monotone_decreasing = false;
        rep.radii.push_back(r);
        rep.max_norm.push_back(worst);
    }
    return rep;
}

ResidualFn commutator_probe(const Element& a) {
    return [a](const Element& x) {
        Element out = commutator(a, x);
        out += Element::real(x.level(), 1.0);
        return out;
    };
}

}  // namespace cd::poly

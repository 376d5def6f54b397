#include "cdalg/structure.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "cdalg/kernels.hpp"
#include "cdalg/linalg.hpp"
#include "cdalg/random.hpp"

namespace cd {

DependenceReport is_c_dependent(const Element& x, const Element& y, double angular_tol) {
    require_same_level(x, y);
    const Element a = split(x).imag;
    const Element b = split(y).imag;
    const double na = norm(a), nb = norm(b);
    if (na <= zero_threshold(x.coeffs()) || nb <= zero_threshold(y.coeffs())) return {true, 0.0};
    // Angle between the lines span(a), span(b): atan2(|b_perp|, |<a_hat, b>|).
    const Element ua = (1.0 / na) * a;
    const Element ub = (1.0 / nb) * b;
    const double along = inner(ua, ub);
    const double perp = norm(ub - along * ua);
    const double margin = std::atan2(perp, std::abs(along));
    return {margin <= angular_tol, margin};
}

CentralizerReport centralizer_report(const Element& a, double rank_tol) {
    if (!is_pure(a)) throw Error(ErrorKind::NotPure, "centralizer needs a pure element");
    if (is_zero(a)) throw Error(ErrorKind::ZeroElement, "centralizer of zero");
    const auto left = linalg::left_mul_matrix(a);
    const auto right = linalg::right_mul_matrix(a);
    // Restrict L_a - R_a to Im(A_n): drop the e0 column.
    const auto diff = (left - right).columns(1, a.dim() - 1);

    CentralizerReport rep;
    rep.level = a.level();
    rep.element = a;
    rep.centralizer_dim = diff.cols() - linalg::rank(diff, rank_tol);
    rep.kernel_dim = left.cols() - linalg::rank(left, rank_tol);
    rep.decomposition_ok = rep.centralizer_dim == 1 + rep.kernel_dim;
    return rep;
}

namespace {

struct TwoTerm {
    std::size_t i, j;
    double sign;
};

std::vector<TwoTerm> two_term_candidates(std::size_t dim) {
    std::vector<TwoTerm> out;
    for (std::size_t i = 1; i < dim; ++i)
        for (std::size_t j = i + 1; j < dim; ++j)
            for (double s : {1.0, -1.0}) out.push_back({i, j, s});
    return out;
}

Element two_term(int level, const TwoTerm& t) {
    Element e = Element::basis(level, t.i);
    e += t.sign * Element::basis(level, t.j);
    return e;
}

// (e_i + s e_j)(e_k + t e_l) expands to four signed basis terms; it vanishes
// exactly when they cancel in pairs.
bool two_term_product_vanishes(int level, const TwoTerm& u, const TwoTerm& v) {
    const std::array<std::size_t, 4> idx = {u.i ^ v.i, u.i ^ v.j, u.j ^ v.i, u.j ^ v.j};
    const std::array<double, 4> coef = {
        1.0 * kernels::basis_sign(level, u.i, v.i),
        v.sign * kernels::basis_sign(level, u.i, v.j),
        u.sign * kernels::basis_sign(level, u.j, v.i),
        u.sign * v.sign * kernels::basis_sign(level, u.j, v.j)};
    for (std::size_t a = 0; a < 4; ++a) {
        double total = 0.0;
        for (std::size_t b = 0; b < 4; ++b)
            if (idx[b] == idx[a]) total += coef[b];
        if (total != 0.0) return false;
    }
    return true;
}

}  // namespace

std::vector<ZeroDivisorPair> zero_divisor_pairs(int level, std::size_t limit) {
    if (level < 1) throw Error(ErrorKind::InvalidArgument, "zero-divisor search needs level >= 1");
    if (level > max_level()) throw Error(ErrorKind::LevelOutOfRange, "level above maximum");
    std::vector<ZeroDivisorPair> found;
    if (limit == 0) return found;
    const auto cands = two_term_candidates(std::size_t{1} << level);
    for (const auto& cu : cands) {
        for (const auto& cv : cands) {
            if (!two_term_product_vanishes(level, cu, cv)) continue;
            Element u = two_term(level, cu);
            Element v = two_term(level, cv);
            const double pn = norm(u * v);
            if (pn > 1e-12) continue;
            found.push_back({std::move(u), std::move(v), pn});
            if (found.size() >= limit) return found;
        }
    }
    return found;
}

std::optional<ZeroDivisorPair> find_zero_divisor_pair(int level) {
    auto pairs = zero_divisor_pairs(level, 1);
    if (pairs.empty()) return std::nullopt;
    return pairs.front();
}

std::string_view to_string(Verdict v) noexcept {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

const LawResult& LawProfile::get(std::string_view name) const {
    for (const auto& l : laws)
        if (l.name == name) return l;
    throw Error(ErrorKind::InvalidArgument, "unknown law: " + std::string(name));
}

bool law_expected(std::string_view name, int level) {
    if (name == "commutative") return level <= 1;
    if (name == "associative") return level <= 2;
    if (name == "alternative" || name == "normed") return level <= 3;
    if (name == "flexible" || name == "power_associative") return true;
    throw Error(ErrorKind::InvalidArgument, "unknown law: " + std::string(name));
}

LawProfile law_profile(int level, int trials, std::uint64_t seed) {
    if (trials <= 0) throw Error(ErrorKind::InvalidArgument, "trials must be positive");
    if (level < 0 || level > max_level()) throw Error(ErrorKind::LevelOutOfRange, "law_profile level");

    enum { kComm, kAssoc, kAlt, kNormed, kFlex, kPow, kCount };
    static constexpr std::array<const char*, kCount> names = {
        "commutative", "associative", "alternative", "normed", "flexible", "power_associative"};
    std::array<double, kCount> worst{};

    for (int t = 0; t < trials; ++t) {
        Rng rng = trial_rng(seed, static_cast<std::uint64_t>(t));
        const Element x = random_element(rng, level);
        const Element y = random_element(rng, level);
        const Element z = random_element(rng, level);
        const double nx = norm(x), ny = norm(y), nz = norm(z);
        const Element xy = x * y;
        const Element yx = y * x;

        worst[kComm] = std::max(worst[kComm], norm(xy - yx) / (nx * ny));
        worst[kAssoc] = std::max(worst[kAssoc], norm(xy * z - x * (y * z)) / (nx * ny * nz));
        const double left_alt = norm((x * x) * y - x * xy);
        const double right_alt = norm(x * (y * y) - xy * y);
        worst[kAlt] = std::max(worst[kAlt], std::max(left_alt / (nx * nx * ny), right_alt / (nx * ny * ny)));
        worst[kNormed] = std::max(worst[kNormed], std::abs(norm(xy) - nx * ny) / (nx * ny));
        worst[kFlex] = std::max(worst[kFlex], norm(xy * x - x * yx) / (nx * nx * ny));

        std::array<Element, 9> pw;
        pw[1] = x;
        for (int m = 2; m <= 8; ++m) pw[m] = x * pw[m - 1];
        for (int m = 1; m <= 7; ++m)
            for (int k = 1; m + k <= 8; ++k)
                worst[kPow] = std::max(worst[kPow], norm(pw[m] * pw[k] - pw[m + k]) / std::pow(nx, m + k));
    }

    LawProfile prof;
    prof.level = level;
    prof.trials = trials;
    prof.seed = seed;
    for (int i = 0; i < kCount; ++i) {
        LawResult r;
        r.name = names[i];
        r.max_residual = worst[i];
        if (worst[i] <= kLawPassTol) r.verdict = Verdict::pass;
        else if (worst[i] >= kLawFailTol) r.verdict = Verdict::fail;
        else r.verdict = Verdict::inconclusive;
        prof.laws.push_back(std::move(r));
    }
    return prof;
}

}  // namespace cd

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cdalg/random.hpp"
#include "cdalg/transcendental.hpp"
#include "oracles.hpp"

using namespace cd;
using std::numbers::pi;

namespace {

ErrorKind kind_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no cd::Error thrown");
    return ErrorKind::Parse;
}

}  // namespace

TEST_CASE("exp_pure anchors") {
    Rng g(31);
    for (int n = 1; n <= 5; ++n)
        for (int t = 0; t < 20; ++t) {
            const Element a = random_unit_pure(g, n);
            CHECK(norm(exp_pure((pi / 2) * a) - a) <= 1e-12);
            CHECK(norm(exp_pure(pi * a) + Element::real(n, 1.0)) <= 1e-12);
            CHECK(norm(exp_pure(2.3 * a)) == doctest::Approx(1.0).epsilon(1e-12));
        }
    CHECK(exp_pure(Element::zero(3)) == Element::real(3, 1.0));
    const Element tiny = exp_pure(1e-12 * Element::basis(2, 1));
    CHECK(std::abs(tiny[0] - 1.0) <= 1e-20);
    CHECK(std::abs(tiny[1] - 1e-12) <= 1e-20);
    CHECK(kind_of([] { exp_pure(Element::real(2, 0.5)); }) == ErrorKind::NotPure);
}

TEST_CASE("exp") {
    CHECK(exp(Element::zero(3)) == Element::real(3, 1.0));
    const Element x = make_element(2, {std::log(2.0), pi / 2, 0, 0});
    CHECK(norm(exp(x) - 2.0 * Element::basis(2, 1)) <= 1e-12);
    for (double r : {-1.0, 0.0, 1.0}) CHECK(norm(exp(Element::real(2, r)) - Element::real(2, std::exp(r))) <= 1e-15);
    CHECK(kind_of([] { exp(Element::real(1, 1000.0)); }) == ErrorKind::Overflow);

    Rng g(32);
    for (int n = 1; n <= 5; ++n)
        for (int t = 0; t < 50; ++t) {
            Element y = random_element(g, n);
            y = (3.0 / norm(y)) * y;
            const auto s = oracle::series_exp({y.coeffs().begin(), y.coeffs().end()});
            const Element e = exp(y);
            for (std::size_t i = 0; i < s.size(); ++i) REQUIRE(std::abs(e[i] - s[i]) <= 1e-12);
        }
}

TEST_CASE("exp_pure scales along a fixed direction") {
    Rng g(33);
    std::uniform_real_distribution<double> u(-4, 4);
    for (int t = 0; t < 100; ++t) {
        const Element a = random_pure(g, 3);
        const double s = u(g), na = norm(a);
        const Element expect = Element::real(3, std::cos(s * na)) + (std::sin(s * na) / na) * a;
        CHECK(norm(exp_pure(s * a) - expect) <= 1e-12);
    }
}

TEST_CASE("polar form") {
    const PolarForm p = to_polar(Element::real(2, 2.0));
    CHECK(p.magnitude == 2.0);
    CHECK(p.angle == 0.0);
    CHECK(p.degenerate);
    const PolarForm q = to_polar(Element::basis(2, 1));
    CHECK(q.magnitude == 1.0);
    CHECK(q.angle == doctest::Approx(pi / 2));
    CHECK(q.direction == Element::basis(2, 1));
    CHECK_FALSE(q.degenerate);
    const PolarForm r = to_polar(Element::real(2, -3.0));
    CHECK(r.magnitude == 3.0);
    CHECK(r.angle == doctest::Approx(pi));
    CHECK(r.degenerate);
    CHECK(kind_of([] { to_polar(Element::zero(2)); }) == ErrorKind::ZeroElement);
    Rng g(34);
    for (int t = 0; t < 100; ++t) {
        const Element x = random_element(g, 4);
        CHECK(norm(to_polar(x).reconstruct() - x) <= 1e-12 * norm(x));
    }
}

TEST_CASE("log_principal") {
    CHECK(log_principal(Element::real(2, 1.0)) == Element::zero(2));
    const Element l = log_principal(2.0 * Element::basis(2, 1));
    CHECK(l[0] == doctest::Approx(std::log(2.0)));
    CHECK(l[1] == doctest::Approx(pi / 2));
    CHECK(kind_of([] { log_principal(Element::real(2, -1.0)); }) == ErrorKind::NoPrincipalDirection);
    CHECK(kind_of([] { log_principal(Element::zero(2)); }) == ErrorKind::ZeroElement);
    const Element lf = log_principal(Element::real(2, -1.0), 3.0 * Element::basis(2, 2));
    CHECK(norm(lf - pi * Element::basis(2, 2)) <= 1e-15);
    CHECK(kind_of([] { log_principal(Element::real(2, -1.0), Element::real(2, 1.0)); }) == ErrorKind::NotPure);

    Rng g(35);
    for (int n = 1; n <= 5; ++n)
        for (int t = 0; t < 50; ++t) {
            const Element y = random_element(g, n);
            CHECK(norm(exp(log_principal(y)) - y) <= 1e-9 * norm(y));
            const Element a = random_unit_pure(g, n);
            CHECK(std::abs(log_principal(a).real_part()) <= 1e-15);
        }
}

TEST_CASE("k_root") {
    CHECK(norm(k_root(Element::real(1, 4.0), 2) - Element::real(1, 2.0)) <= 1e-15);
    CHECK(norm(k_root(Element::real(2, -1.0), 2, Element::basis(2, 1)) - Element::basis(2, 1)) <= 1e-15);
    CHECK(kind_of([] { k_root(Element::real(2, -1.0), 2); }) == ErrorKind::NoPrincipalDirection);
    CHECK(kind_of([] { k_root(Element::real(2, 1.0), 0); }) == ErrorKind::InvalidArgument);
    Rng g(36);
    for (int k = 1; k <= 6; ++k) {
        const Element a = random_unit_pure(g, 3);
        CHECK(norm(power_int(k_root(a, k), k) - a) <= 1e-9);
    }
    // the literal reading is a k-th root only by accident
    const Element x = make_element(2, {0, 2, 0, 0});
    CHECK(norm(power_int(k_root_literal(x, 2), 2) - x) > 0.1);
    CHECK(norm(power_int(k_root(x, 2), 2) - x) <= 1e-12);
}

TEST_CASE("scale_map") {
    CHECK(scale_map(Element::basis(2, 1), 3) == 3.0 * Element::basis(2, 1));
    CHECK(scale_map(make_element(1, {1, 2}), 0) == Element::zero(1));
    CHECK(scale_map(Element::real(2, 1.0) + Element::basis(2, 2), -1) == make_element(2, {-1, 0, -1, 0}));
}

TEST_CASE("exponent law dichotomy") {
    const Element e1 = Element::basis(2, 1), e2 = Element::basis(2, 2);
    CHECK(norm(exp(e1 + e2) - exp(e1) * exp(e2)) > 0.05);
    Rng g(37);
    std::uniform_real_distribution<double> u(-2, 2);
    for (int n = 1; n <= 5; ++n)
        for (int t = 0; t < 50; ++t) {
            const Element a = random_unit_pure(g, n);
            const Element x = Element::real(n, u(g)) + u(g) * a, y = Element::real(n, u(g)) + u(g) * a;
            CHECK(norm(exp(x + y) - exp(x) * exp(y)) <= 1e-9 * std::max(1.0, norm(exp(x + y))));
        }
}

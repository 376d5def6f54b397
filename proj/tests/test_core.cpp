#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "cdalg/element.hpp"
#include "cdalg/random.hpp"
#include "oracles.hpp"

using namespace cd;

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

oracle::Vec vec(const Element& x) { return {x.coeffs().begin(), x.coeffs().end()}; }

}  // namespace

TEST_CASE("make_element") {
    CHECK(make_element(0, {3.0})[0] == 3.0);
    CHECK(make_element(2, {0, 1, 0, 0}) == Element::basis(2, 1));
    CHECK(kind_of([] { make_element(1, {1, 2, 3}); }) == ErrorKind::LengthMismatch);
    CHECK(kind_of([] { make_element(1, {1, std::nan("")}); }) == ErrorKind::NonFinite);
    CHECK(kind_of([] { make_element(1, {1, INFINITY}); }) == ErrorKind::NonFinite);
    CHECK(kind_of([] { make_element(9, std::vector<double>(512)); }) == ErrorKind::LevelOutOfRange);
    CHECK(kind_of([] { make_element(-1, {1}); }) == ErrorKind::LevelOutOfRange);
}

TEST_CASE("max level is configurable") {
    set_max_level(9);
    CHECK(make_element(9, std::vector<double>(512)).dim() == 512);
    set_max_level(kDefaultMaxLevel);
    CHECK_THROWS_AS(set_max_level(kHardMaxLevel + 1), Error);
}

TEST_CASE("linear operations") {
    const Element e1 = Element::basis(2, 1), e2 = Element::basis(2, 2);
    CHECK(e1 + e2 == make_element(2, {0, 1, 1, 0}));
    CHECK(Element::real(2, 2.0) - Element::real(2, 2.0) == Element::zero(2));
    CHECK(0.5 * (2.0 * e1) == e1);
    CHECK(kind_of([&] { (void)(e1 + Element::basis(3, 1)); }) == ErrorKind::LevelMismatch);
    CHECK(kind_of([&] { (void)(e1 * Element::basis(3, 1)); }) == ErrorKind::LevelMismatch);
}

TEST_CASE("multiply") {
    CHECK(Element::basis(2, 1) * Element::basis(2, 2) == Element::basis(2, 3));
    for (int n = 1; n <= 5; ++n)
        CHECK(Element::basis(n, 1) * Element::basis(n, 1) == Element::real(n, -1.0));
    Rng g(3);
    for (int n = 0; n <= 7; ++n) {
        const Element x = random_element(g, n), y = random_element(g, n);
        const Element e0 = Element::real(n, 1.0);
        CHECK(norm(e0 * x - x) == 0.0);
        CHECK(norm(x * e0 - x) == 0.0);
        CHECK(oracle::dist(vec(x * y), oracle::mul(vec(x), vec(y))) <= 1e-12);
        CHECK(norm(reference_multiply(x, y) - x * y) <= 1e-12);
    }
}

TEST_CASE("conjugate") {
    CHECK(conjugate(Element::real(3, 1.0)) == Element::real(3, 1.0));
    CHECK(conjugate(Element::basis(3, 5)) == -Element::basis(3, 5));
    CHECK(conjugate(make_element(1, {2, 3})) == make_element(1, {2, -3}));
    Rng g(4);
    for (int n = 0; n <= 6; ++n) {
        const Element x = random_element(g, n);
        CHECK(conjugate(x) == reference_conjugate(x));
        CHECK(conjugate(conjugate(x)) == x);
    }
}

TEST_CASE("inner, norm, split") {
    const Element e1 = Element::basis(2, 1), e2 = Element::basis(2, 2), e3 = Element::basis(2, 3);
    CHECK(inner(e1, e2) == 0.0);
    CHECK(inner(e1, e1) == 1.0);
    CHECK(inner(Element::real(2, 2.0) + e3, e3) == 1.0);
    CHECK(norm_sq(e1 + e2) == 2.0);
    CHECK(norm_sq(Element::zero(2)) == 0.0);
    CHECK(norm_sq(Element::real(0, 3.0)) == 9.0);

    const Split s = split(make_element(1, {2, 3}));
    CHECK(s.real == 2.0);
    CHECK(s.imag == make_element(1, {0, 3}));
    CHECK(split(Element::real(2, 1.0)).imag == Element::zero(2));
    CHECK(split(Element::basis(3, 7)).real == 0.0);
    CHECK(split(Element::basis(3, 7)).imag == Element::basis(3, 7));
}

TEST_CASE("inverse") {
    CHECK(inverse(Element::real(0, 2.0)) == Element::real(0, 0.5));
    CHECK(inverse(Element::basis(2, 1)) == -Element::basis(2, 1));
    CHECK(kind_of([] { inverse(Element::zero(3)); }) == ErrorKind::ZeroElement);
    CHECK(kind_of([] { inverse(Element::real(1, 1e-13)); }) == ErrorKind::ZeroElement);
    CHECK(is_zero(Element::real(1, 1e-13)));
    CHECK_FALSE(is_zero(Element::real(1, 1e-11)));
}

TEST_CASE("power_int") {
    CHECK(power_int(Element::basis(2, 1), 3) == -Element::basis(2, 1));
    Rng g(5);
    const Element x = random_element(g, 4);
    CHECK(power_int(x, 0) == Element::real(4, 1.0));
    CHECK(norm(power_int(Element::real(0, 2.0), -2) - Element::real(0, 0.25)) <= 1e-16);
    CHECK(kind_of([] { power_int(Element::zero(2), 0); }) == ErrorKind::ZeroElement);
    CHECK(kind_of([] { power_int(Element::zero(2), -1); }) == ErrorKind::ZeroElement);
    CHECK(power_int(Element::zero(2), 3) == Element::zero(2));

    // reference order x * x^{k-1}, agreeing with binary powering
    Element p = Element::real(4, 1.0);
    for (int k = 1; k <= 7; ++k) {
        p = x * p;
        CHECK(power_int(x, k) == p);
    }
    const Element x2 = x * x, x4 = x2 * x2;
    CHECK(norm(power_int(x, 4) - x4) <= 1e-12 * norm(x4));
}

TEST_CASE("embed_up") {
    CHECK(embed_up(Element::basis(1, 1), 0.0) == Element::basis(2, 1));
    CHECK(embed_up(Element::zero(1), 1.0) == Element::basis(2, 2));
    CHECK(kind_of([] { embed_up(Element::real(2, 1.0), Element::basis(1, 1)); }) == ErrorKind::LevelMismatch);
    // (x, r e0)^2 = (x^2 - r^2 e0, r(x + conj x)); x = e1, r = 1 gives -2 e0
    CHECK(power_int(embed_up(Element::basis(1, 1), 1.0), 2) == embed_up(Element::real(1, -2.0), 0.0));
}

TEST_CASE("commutator and associator") {
    CHECK(commutator(Element::basis(3, 1), Element::basis(3, 1)) == Element::zero(3));
    Rng g(6);
    for (int n = 0; n <= 6; ++n) {
        const Element x = random_element(g, n), y = random_element(g, n);
        CHECK(norm(associator(x, y, x)) <= 1e-12);
    }
    double best = 0.0;
    for (std::size_t i = 1; i < 16; ++i)
        for (std::size_t j = 1; j < 16; ++j)
            for (std::size_t k = 1; k < 16; ++k)
                best = std::max(best, norm(associator(Element::basis(4, i), Element::basis(4, j), Element::basis(4, k))));
    CHECK(best > 0.1);
}

TEST_CASE("error kinds render their names") {
    CHECK(to_string(ErrorKind::NoPrincipalDirection) == std::string("NoPrincipalDirection"));
    const Error e(ErrorKind::OffSlice, "detail");
    CHECK(std::string(e.what()).find("OffSlice") != std::string::npos);
}

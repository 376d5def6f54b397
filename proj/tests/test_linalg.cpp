#include <doctest.h>

#include "cdalg/linalg.hpp"
#include "cdalg/random.hpp"
#include "cdalg/structure.hpp"
#include "oracles.hpp"

using namespace cd;
using namespace cd::linalg;

namespace {

Eigen::MatrixXd to_eigen(const DenseMatrix& m) {
    Eigen::MatrixXd e(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) e(r, c) = m(r, c);
    return e;
}

}  // namespace

TEST_CASE("multiplication operator matrices") {
    const DenseMatrix id = left_mul_matrix(Element::real(3, 1.0));
    CHECK(id.norm() == doctest::Approx(std::sqrt(8.0)));
    CHECK((id - DenseMatrix::identity(8)).max_abs() == 0.0);

    const DenseMatrix l = left_mul_matrix(Element::basis(1, 1));
    CHECK(l(0, 0) == 0.0);
    CHECK(l(0, 1) == -1.0);
    CHECK(l(1, 0) == 1.0);
    CHECK(l(1, 1) == 0.0);

    CHECK((left_mul_matrix(Element::real(2, 2.0)) - 2.0 * DenseMatrix::identity(4)).max_abs() == 0.0);

    Rng g(21);
    for (int n = 0; n <= 5; ++n)
        for (int t = 0; t < 100; ++t) {
            const Element a = random_element(g, n), y = random_element(g, n);
            const auto ly = left_mul_matrix(a).apply(y.coeffs());
            const auto ry = right_mul_matrix(a).apply(y.coeffs());
            const Element ay = a * y, ya = y * a;
            for (std::size_t i = 0; i < ay.dim(); ++i) {
                REQUIRE(std::abs(ly[i] - ay[i]) <= 1e-12);
                REQUIRE(std::abs(ry[i] - ya[i]) <= 1e-12);
            }
        }
}

TEST_CASE("nullspace and rank") {
    CHECK(nullspace(DenseMatrix::identity(4)).empty());
    CHECK(nullspace(DenseMatrix(2, 2)).size() == 2);
    CHECK(rank(DenseMatrix::identity(5)) == 5);
    CHECK(rank(DenseMatrix(3, 4)) == 0);
    CHECK(rank(DenseMatrix(3, 2, {1, 2, -2, -4, 0.5, 1})) == 1);

    const auto zd = find_zero_divisor_pair(4);
    REQUIRE(zd);
    const DenseMatrix lu = left_mul_matrix(zd->u);
    const auto ns = nullspace(lu);
    CHECK_FALSE(ns.empty());
    for (const auto& v : ns) {
        const auto mv = lu.apply(v);
        double s = 0.0, vv = 0.0;
        for (double x : mv) s += x * x;
        for (double x : v) vv += x * x;
        CHECK(std::sqrt(s) <= 1e-10 * lu.norm() * std::sqrt(vv));
        CHECK(vv == doctest::Approx(1.0));
    }
}

TEST_CASE("normed levels have no left-multiplication kernel") {
    Rng g(22);
    for (int n = 0; n <= 3; ++n)
        for (int t = 0; t < 50; ++t) CHECK(nullspace(left_mul_matrix(random_element(g, n))).empty());
}

TEST_CASE("rank agrees with an SVD oracle and rank-nullity holds") {
    Rng g(23);
    std::uniform_int_distribution<int> dim(1, 9);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int t = 0; t < 200; ++t) {
        const std::size_t r = dim(g), c = dim(g);
        const std::size_t k = std::min<std::size_t>(dim(g), std::min(r, c));
        // product of r x k and k x c factors has rank k almost surely
        DenseMatrix a(r, k), b(k, c), m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < k; ++j) a(i, j) = u(g);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < c; ++j) b(i, j) = u(g);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                for (std::size_t l = 0; l < k; ++l) m(i, j) += a(i, l) * b(l, j);
        const std::size_t rk = rank(m);
        CHECK(rk == k);
        CHECK(static_cast<int>(rk) == oracle::svd_rank(to_eigen(m), 1e-10));
        CHECK(rk + nullspace(m).size() == c);
    }
    // zero-divisor operators: compare with the SVD rank too
    for (const auto& p : zero_divisor_pairs(4, 20)) {
        const DenseMatrix lu = left_mul_matrix(p.u);
        CHECK(static_cast<int>(rank(lu)) == oracle::svd_rank(to_eigen(lu), 1e-10));
    }
}

TEST_CASE("regularized least squares") {
    const DenseMatrix a(3, 2, {1, 0, 0, 1, 1, 1});
    const std::vector<double> b{1, 2, 3};
    const auto x = solve_least_squares(a, b, 0.0);
    CHECK(x[0] == doctest::Approx(1.0));
    CHECK(x[1] == doctest::Approx(2.0));
    CHECK_THROWS_AS(solve_least_squares(DenseMatrix(2, 2), std::vector<double>{1, 1}, 0.0), Error);
}

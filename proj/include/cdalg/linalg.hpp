#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cdalg/element.hpp"

namespace cd::linalg {

inline constexpr double kDefaultRankTol = 1e-10;

/// Small dense real matrix, row-major.
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), entries_(rows * cols, fill) {}
    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

    static DenseMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::span<const double> entries() const noexcept { return entries_; }

    double& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    double operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::vector<double> apply(std::span<const double> v) const;
    /// Largest absolute entry.
    double max_abs() const noexcept;
    /// Frobenius norm.
    double norm() const noexcept;

    /// Copy of columns [first, first + count).
    DenseMatrix columns(std::size_t first, std::size_t count) const;

    friend DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
    friend DenseMatrix operator*(double s, DenseMatrix a);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> entries_;
};

/// Column j is the coefficient vector of a * e_j.
DenseMatrix left_mul_matrix(const Element& a);
/// Column j is the coefficient vector of e_j * a.
DenseMatrix right_mul_matrix(const Element& a);

/// Orthonormal basis of the right nullspace. Pivots at or below
/// tol * max|M| are treated as zero.
std::vector<std::vector<double>> nullspace(const DenseMatrix& m, double tol = kDefaultRankTol);

std::size_t rank(const DenseMatrix& m, double tol = kDefaultRankTol);

/// Minimum-norm-ish least-squares step: solves (A^T A + mu I) x = A^T b.
/// Throws NoConvergence if the regularised system is singular.
std::vector<double> solve_least_squares(const DenseMatrix& a, std::span<const double> b, double mu);

}  // namespace cd::linalg

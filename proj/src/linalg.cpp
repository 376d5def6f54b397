#include "cdalg/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace cd::linalg {

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw Error(ErrorKind::LengthMismatch, "matrix entries do not match rows*cols");
    for (double v : entries_)
        if (!std::isfinite(v)) throw Error(ErrorKind::NonFinite, "matrix entry is not finite");
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

std::vector<double> DenseMatrix::apply(std::span<const double> v) const {
    if (v.size() != cols_) throw Error(ErrorKind::LengthMismatch, "matrix-vector size mismatch");
    std::vector<double> out(rows_, 0.0);
    for (std::size_t r = 0; r < rows_; ++r) {
        double s = 0.0;
        for (std::size_t c = 0; c < cols_; ++c) s += (*this)(r, c) * v[c];
        out[r] = s;
    }
    return out;
}

double DenseMatrix::max_abs() const noexcept {
    double m = 0.0;
    for (double v : entries_) m = std::max(m, std::abs(v));
    return m;
}

double DenseMatrix::norm() const noexcept {
    double s = 0.0;
    for (double v : entries_) s += v * v;
    return std::sqrt(s);
}

DenseMatrix DenseMatrix::columns(std::size_t first, std::size_t count) const {
    if (first + count > cols_) throw Error(ErrorKind::InvalidArgument, "column range out of bounds");
    DenseMatrix out(rows_, count);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < count; ++c) out(r, c) = (*this)(r, first + c);
    return out;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw Error(ErrorKind::LengthMismatch, "matrix shapes differ");
    DenseMatrix out = a;
    for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] -= b.entries_[i];
    return out;
}

DenseMatrix operator*(double s, DenseMatrix a) {
    for (double& v : a.entries_) v *= s;
    return a;
}

namespace {

template <bool Left>
DenseMatrix mul_matrix(const Element& a) {
    const std::size_t d = a.dim();
    DenseMatrix m(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        const Element ej = Element::basis(a.level(), j);
        const Element col = Left ? a * ej : ej * a;
        for (std::size_t i = 0; i < d; ++i) m(i, j) = col[i];
    }
    return m;
}

struct Echelon {
    DenseMatrix reduced;               // reduced row echelon form
    std::vector<std::size_t> pivots;   // pivot column per leading row
};

// Gauss-Jordan with partial pivoting.
Echelon row_reduce(DenseMatrix m, double tol) {
    const std::size_t rows = m.rows(), cols = m.cols();
    const double cutoff = tol * m.max_abs();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t best = r;
        for (std::size_t i = r + 1; i < rows; ++i)
            if (std::abs(m(i, c)) > std::abs(m(best, c))) best = i;
        if (std::abs(m(best, c)) <= cutoff) {
            for (std::size_t i = r; i < rows; ++i) m(i, c) = 0.0;
            continue;
        }
        if (best != r)
            for (std::size_t k = 0; k < cols; ++k) std::swap(m(r, k), m(best, k));
        const double p = m(r, c);
        for (std::size_t k = c; k < cols; ++k) m(r, k) /= p;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            const double f = m(i, c);
            if (f == 0.0) continue;
            for (std::size_t k = c; k < cols; ++k) m(i, k) -= f * m(r, k);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

void orthonormalize(std::vector<std::vector<double>>& basis) {
    // Modified Gram-Schmidt, two passes.
    for (std::size_t i = 0; i < basis.size(); ++i) {
        auto& v = basis[i];
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t j = 0; j < i; ++j) {
                const double p = std::inner_product(v.begin(), v.end(), basis[j].begin(), 0.0);
                for (std::size_t k = 0; k < v.size(); ++k) v[k] -= p * basis[j][k];
            }
        }
        const double n = std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
        for (double& x : v) x /= n;
    }
}

}  // namespace

DenseMatrix left_mul_matrix(const Element& a) { return mul_matrix<true>(a); }
DenseMatrix right_mul_matrix(const Element& a) { return mul_matrix<false>(a); }

std::vector<std::vector<double>> nullspace(const DenseMatrix& m, double tol) {
    if (!(tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
    const Echelon e = row_reduce(m, tol);
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : e.pivots) is_pivot[c] = true;

    std::vector<std::vector<double>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<double> v(cols, 0.0);
        v[free] = 1.0;
        for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
        basis.push_back(std::move(v));
    }
    orthonormalize(basis);
    return basis;
}

std::size_t rank(const DenseMatrix& m, double tol) {
    if (!(tol > 0.0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
    return row_reduce(m, tol).pivots.size();
}

std::vector<double> solve_least_squares(const DenseMatrix& a, std::span<const double> b, double mu) {
    const std::size_t n = a.cols();
    if (b.size() != a.rows()) throw Error(ErrorKind::LengthMismatch, "rhs size mismatch");
    // Normal equations, augmented [A^T A + mu I | A^T b].
    DenseMatrix aug(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            double s = 0.0;
            for (std::size_t r = 0; r < a.rows(); ++r) s += a(r, i) * a(r, j);
            aug(i, j) = s;
            aug(j, i) = s;
        }
        aug(i, i) += mu;
        double s = 0.0;
        for (std::size_t r = 0; r < a.rows(); ++r) s += a(r, i) * b[r];
        aug(i, n) = s;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t best = c;
        for (std::size_t i = c + 1; i < n; ++i)
            if (std::abs(aug(i, c)) > std::abs(aug(best, c))) best = i;
        if (aug(best, c) == 0.0 || !std::isfinite(aug(best, c)))
            throw Error(ErrorKind::NoConvergence, "singular normal equations");
        if (best != c)
            for (std::size_t k = 0; k <= n; ++k) std::swap(aug(c, k), aug(best, k));
        for (std::size_t i = c + 1; i < n; ++i) {
            const double f = aug(i, c) / aug(c, c);
            if (f == 0.0) continue;
            for (std::size_t k = c; k <= n; ++k) aug(i, k) -= f * aug(c, k);
        }
    }
    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        double s = aug(i, n);
        for (std::size_t k = i + 1; k < n; ++k) s -= aug(i, k) * x[k];
        x[i] = s / aug(i, i);
    }
    return x;
}

}  // namespace cd::linalg

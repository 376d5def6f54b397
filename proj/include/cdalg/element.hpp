#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "cdalg/error.hpp"

namespace cd {

inline constexpr int kDefaultMaxLevel = 8;
inline constexpr int kHardMaxLevel = 12;

/// Largest level accepted by make_element (default 8, i.e. 256 coefficients).
int max_level() noexcept;
void set_max_level(int level);

/// ||x|| <= zero_threshold(x) counts as zero for inversion and division.
double zero_threshold(std::span<const double> coeffs) noexcept;

/// An element of A_n = R^{2^n}. Coefficient i belongs to basis vector e_i;
/// the recursive halves are [0, 2^{n-1}) and [2^{n-1}, 2^n).
class Element {
public:
    /// Zero of A_0.
    Element() : level_(0), coeffs_(1, 0.0) {}

    /// Validating constructor (LengthMismatch, NonFinite, LevelOutOfRange).
    Element(int level, std::vector<double> coeffs);

    static Element zero(int level);
    static Element basis(int level, std::size_t index);
    static Element real(int level, double r);

    int level() const noexcept { return level_; }
    std::size_t dim() const noexcept { return coeffs_.size(); }
    std::span<const double> coeffs() const noexcept { return coeffs_; }
    double operator[](std::size_t i) const { return coeffs_[i]; }
    double real_part() const noexcept { return coeffs_[0]; }

    bool operator==(const Element& other) const = default;

    Element& operator+=(const Element& rhs);
    Element& operator-=(const Element& rhs);
    Element& operator*=(double s);

private:
    struct Unchecked {};
    Element(Unchecked, int level, std::vector<double> coeffs)
        : level_(level), coeffs_(std::move(coeffs)) {}

    friend Element make_unchecked(int level, std::vector<double> coeffs);

    int level_;
    std::vector<double> coeffs_;
};

/// Construct without validation; for internal callers that already hold 2^level finite values.
Element make_unchecked(int level, std::vector<double> coeffs);

Element make_element(int level, std::vector<double> coeffs);
Element make_element(int level, std::initializer_list<double> coeffs);

void require_same_level(const Element& x, const Element& y);

Element operator+(Element x, const Element& y);
Element operator-(Element x, const Element& y);
Element operator-(Element x);
Element operator*(double s, Element x);
Element operator*(Element x, double s);

/// Doubling product (a,b)(x,y) = (ax - conj(y) b, y a + b conj(x)).
Element multiply(const Element& x, const Element& y);
inline Element operator*(const Element& x, const Element& y) { return multiply(x, y); }

/// The doubling formula evaluated literally by recursion. Slow; kept as the oracle
/// every product kernel is checked against.
Element reference_multiply(const Element& x, const Element& y);

Element conjugate(const Element& x);
/// Conjugation by its recursive definition: conj(x1, x2) = (conj(x1), -x2).
Element reference_conjugate(const Element& x);

double inner(const Element& x, const Element& y);
double norm_sq(const Element& x);
double norm(const Element& x);
double max_abs(const Element& x) noexcept;

struct Split {
    double real;
    Element imag;
};
Split split(const Element& x);

bool is_zero(const Element& x) noexcept;
/// Real coefficient within 1e-12 of zero, relative to max(1, ||x||).
bool is_pure(const Element& x) noexcept;

Element inverse(const Element& x);

/// x^k with reference order x * x^{k-1}; x^0 = e0; x^{-k} = (x^{-1})^k.
Element power_int(const Element& x, int k);

/// (x, second) in A_{n+1} = A_n x A_n.
Element embed_up(const Element& x, const Element& second);
/// (x, r e0).
Element embed_up(const Element& x, double r);

Element commutator(const Element& x, const Element& y);
Element associator(const Element& x, const Element& y, const Element& z);

}  // namespace cd

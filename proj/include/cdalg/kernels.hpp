#pragma once

// Inner-loop kernels for A_n arithmetic.
//
// The Cayley-Dickson basis satisfies e_i e_j = s(i,j) e_{i^j} with s = ±1, so a
// level-n product is the bilinear form
//
//     out[k] = sum_i x[i] * s(i, i^k) * y[i^k]
//
// evaluated with a precomputed sign table. Each backend provides the same
// entry points; `dispatch` picks one at runtime from CPU features.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace cd::kernels {

enum class Backend { scalar, avx2 };

std::string_view to_string(Backend b) noexcept;

/// Permuted sign table for one level: row i holds s(i, i^k) at column k.
struct SignTable {
    int level = 0;
    std::size_t dim = 1;
    std::vector<double> permuted;  // dim * dim, row-major

    double at(std::size_t i, std::size_t k) const { return permuted[i * dim + k]; }
};

/// Sign of e_i e_j (which equals ±e_{i^j}) at the given level, from the doubling rule.
int basis_sign(int level, std::size_t i, std::size_t j);

/// Cached table; built once per level, thread-safe.
const SignTable& sign_table(int level);

namespace scalar {
void multiply(const SignTable& t, std::span<const double> x, std::span<const double> y,
              std::span<double> out);
double dot(std::span<const double> x, std::span<const double> y);
void axpy(double a, std::span<const double> x, std::span<double> y);
}  // namespace scalar

#ifndef CDALG_HAVE_AVX2_KERNELS
#if defined(__x86_64__) || defined(_M_X64)
#define CDALG_HAVE_AVX2_KERNELS 1
#else
#define CDALG_HAVE_AVX2_KERNELS 0
#endif
#endif

#if CDALG_HAVE_AVX2_KERNELS
namespace avx2 {
void multiply(const SignTable& t, std::span<const double> x, std::span<const double> y,
              std::span<double> out);
double dot(std::span<const double> x, std::span<const double> y);
void axpy(double a, std::span<const double> x, std::span<double> y);
}  // namespace avx2
#endif

bool backend_supported(Backend b) noexcept;
Backend detected_backend() noexcept;
Backend active_backend() noexcept;
/// Override dispatch (tests, benchmarking). Throws cd::Error if unsupported.
void set_backend(Backend b);

// Dispatched entry points. Sizes are the caller's responsibility.
void multiply(int level, std::span<const double> x, std::span<const double> y,
              std::span<double> out);
double dot(std::span<const double> x, std::span<const double> y);
void axpy(double a, std::span<const double> x, std::span<double> y);

}  // namespace cd::kernels

// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.
#include <immintrin.h>

#include "cdalg/kernels.hpp"

namespace cd::kernels::avx2 {

namespace {

// Lane l of the result is lane (l ^ mask) of v, mask in [0, 4).
inline __m256d xor_permute(__m256d v, std::size_t mask) {
    switch (mask) {
        case 0: return v;
        case 1: return _mm256_permute_pd(v, 0b0101);
        case 2: return _mm256_permute2f128_pd(v, v, 0x01);
        default: {
            const __m256d s = _mm256_permute2f128_pd(v, v, 0x01);
            return _mm256_permute_pd(s, 0b0101);
        }
    }
}

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    const __m128d sw = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, sw));
}

}  // namespace

void multiply(const SignTable& t, std::span<const double> x, std::span<const double> y,
              std::span<double> out) {
    const std::size_t d = t.dim;
    if (d < 4) {
        scalar::multiply(t, x, y, out);
        return;
    }
    // For i fixed and k in block m (k = 4m + l), i^k lies in block m ^ (i >> 2)
    // at lane l ^ (i & 3).
    const std::size_t blocks = d / 4;
    for (std::size_t m = 0; m < blocks; ++m) {
        __m256d acc = _mm256_setzero_pd();
        for (std::size_t i = 0; i < d; ++i) {
            const std::size_t src = (m ^ (i >> 2)) * 4;
            const __m256d yv = xor_permute(_mm256_loadu_pd(y.data() + src), i & 3);
            const __m256d sv = _mm256_loadu_pd(t.permuted.data() + i * d + m * 4);
            const __m256d xs = _mm256_mul_pd(_mm256_set1_pd(x[i]), sv);
            acc = _mm256_fmadd_pd(xs, yv, acc);
        }
        _mm256_storeu_pd(out.data() + m * 4, acc);
    }
}

double dot(std::span<const double> x, std::span<const double> y) {
    const std::size_t n = x.size();
    std::size_t i = 0;
    __m256d acc = _mm256_setzero_pd();
    for (; i + 4 <= n; i += 4)
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(x.data() + i), _mm256_loadu_pd(y.data() + i), acc);
    double s = hsum(acc);
    for (; i < n; ++i) s += x[i] * y[i];
    return s;
}

void axpy(double a, std::span<const double> x, std::span<double> y) {
    const std::size_t n = x.size();
    const __m256d av = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d r =
            _mm256_fmadd_pd(av, _mm256_loadu_pd(x.data() + i), _mm256_loadu_pd(y.data() + i));
        _mm256_storeu_pd(y.data() + i, r);
    }
    for (; i < n; ++i) y[i] += a * x[i];
}

}  // namespace cd::kernels::avx2

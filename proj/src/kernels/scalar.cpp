#include <algorithm>

#include "cdalg/kernels.hpp"

namespace cd::kernels::scalar {

void multiply(const SignTable& t, std::span<const double> x, std::span<const double> y,
              std::span<double> out) {
    const std::size_t d = t.dim;
    std::fill(out.begin(), out.begin() + d, 0.0);
    for (std::size_t i = 0; i < d; ++i) {
        const double xi = x[i];
        const double* row = t.permuted.data() + i * d;
        for (std::size_t k = 0; k < d; ++k) out[k] += (xi * row[k]) * y[i ^ k];
    }
}

double dot(std::span<const double> x, std::span<const double> y) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

void axpy(double a, std::span<const double> x, std::span<double> y) {
    for (std::size_t i = 0; i < x.size(); ++i) y[i] += a * x[i];
}

}  // namespace cd::kernels::scalar

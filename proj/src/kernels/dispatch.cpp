#include <atomic>

#include "cdalg/error.hpp"
#include "cdalg/kernels.hpp"

namespace cd::kernels {

std::string_view to_string(Backend b) noexcept {
    switch (b) {
        case Backend::scalar: return "scalar";
        case Backend::avx2: return "avx2";
    }
    return "unknown";
}

bool backend_supported(Backend b) noexcept {
    switch (b) {
        case Backend::scalar: return true;
        case Backend::avx2:
#if CDALG_HAVE_AVX2_KERNELS && (defined(__GNUC__) || defined(__clang__))
            return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
            return false;
#endif
    }
    return false;
}

Backend detected_backend() noexcept {
    return backend_supported(Backend::avx2) ? Backend::avx2 : Backend::scalar;
}

namespace {
std::atomic<Backend>& active() {
    static std::atomic<Backend> b{detected_backend()};
    return b;
}
}  // namespace

Backend active_backend() noexcept { return active().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
    if (!backend_supported(b))
        throw Error(ErrorKind::InvalidArgument,
                    std::string("backend not supported on this CPU: ") + std::string(to_string(b)));
    active().store(b, std::memory_order_relaxed);
}

void multiply(int level, std::span<const double> x, std::span<const double> y,
              std::span<double> out) {
    const SignTable& t = sign_table(level);
#if CDALG_HAVE_AVX2_KERNELS
    if (active_backend() == Backend::avx2) return avx2::multiply(t, x, y, out);
#endif
    scalar::multiply(t, x, y, out);
}

double dot(std::span<const double> x, std::span<const double> y) {
#if CDALG_HAVE_AVX2_KERNELS
    if (active_backend() == Backend::avx2) return avx2::dot(x, y);
#endif
    return scalar::dot(x, y);
}

void axpy(double a, std::span<const double> x, std::span<double> y) {
#if CDALG_HAVE_AVX2_KERNELS
    if (active_backend() == Backend::avx2) return avx2::axpy(a, x, y);
#endif
    scalar::axpy(a, x, y);
}

}  // namespace cd::kernels

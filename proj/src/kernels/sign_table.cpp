#include <array>
#include <mutex>

#include "cdalg/element.hpp"
#include "cdalg/kernels.hpp"

namespace cd::kernels {

// Basis products under (a,b)(x,y) = (ax - conj(y) b, y a + b conj(x)), with
// h = 2^{level-1}, i' = i - h, j' = j - h and conj(e_m) = -e_m for m > 0:
//   (e_i, 0)(e_j, 0)   = (e_i e_j, 0)
//   (e_i, 0)(0, e_j')  = (0, e_j' e_i)
//   (0, e_i')(e_j, 0)  = (0, e_i' conj(e_j))
//   (0, e_i')(0, e_j') = (-conj(e_j') e_i', 0)
int basis_sign(int level, std::size_t i, std::size_t j) {
    int sign = 1;
    while (level > 0) {
        const std::size_t h = std::size_t{1} << (level - 1);
        const bool hi = i >= h;
        const bool hj = j >= h;
        if (!hi && hj) {
            const std::size_t jp = j - h;
            j = i;
            i = jp;
        } else if (hi && !hj) {
            i -= h;
            if (j != 0) sign = -sign;
        } else if (hi && hj) {
            const std::size_t ip = i - h;
            const std::size_t jp = j - h;
            if (jp != 0) sign = -sign;
            sign = -sign;
            i = jp;
            j = ip;
        }
        --level;
    }
    return sign;
}

namespace {

SignTable build(int level) {
    SignTable t;
    t.level = level;
    t.dim = std::size_t{1} << level;
    t.permuted.resize(t.dim * t.dim);
    for (std::size_t i = 0; i < t.dim; ++i)
        for (std::size_t k = 0; k < t.dim; ++k)
            t.permuted[i * t.dim + k] = basis_sign(level, i, i ^ k);
    return t;
}

}  // namespace

const SignTable& sign_table(int level) {
    if (level < 0 || level > kHardMaxLevel)
        throw Error(ErrorKind::LevelOutOfRange, "sign table level " + std::to_string(level));
    static std::array<SignTable, kHardMaxLevel + 1> tables;
    static std::array<std::once_flag, kHardMaxLevel + 1> flags;
    std::call_once(flags[level], [level] { tables[level] = build(level); });
    return tables[level];
}

}  // namespace cd::kernels

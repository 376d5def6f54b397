#include "cdalg/random.hpp"

#include <cmath>

namespace cd {

Element random_element(Rng& rng, int level, double lo, double hi) {
    std::uniform_real_distribution<double> dist(lo, hi);
    std::vector<double> c(std::size_t{1} << level);
    for (double& v : c) v = dist(rng);
    return make_unchecked(level, std::move(c));
}

Element random_pure(Rng& rng, int level) {
    Element x = random_element(rng, level);
    return split(x).imag;
}

Element random_unit_pure(Rng& rng, int level) {
    if (level < 1) throw Error(ErrorKind::InvalidArgument, "A_0 has no imaginary directions");
    std::normal_distribution<double> g;
    std::vector<double> c(std::size_t{1} << level, 0.0);
    for (;;) {
        double s = 0.0;
        for (std::size_t i = 1; i < c.size(); ++i) {
            c[i] = g(rng);
            s += c[i] * c[i];
        }
        if (s > 1e-6) {
            const double inv = 1.0 / std::sqrt(s);
            for (double& v : c) v *= inv;
            return make_unchecked(level, c);
        }
    }
}

}  // namespace cd

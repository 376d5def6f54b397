#include <cmath>
#include <numbers>

#include "cdalg/poly.hpp"

namespace cd::poly {

double winding_turns(std::span<const Complex> samples) {
    if (samples.size() < 8) throw Error(ErrorKind::InvalidArgument, "winding needs at least 8 samples");
    if (std::abs(samples.front() - samples.back()) > 1e-9)
        throw Error(ErrorKind::OpenCurve, "first and last samples differ");
    for (const auto& z : samples)
        if (std::abs(z) <= 1e-9) throw Error(ErrorKind::OriginOnPath, "loop passes through the origin");
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
        const double step = std::arg(samples[i + 1] / samples[i]);
        if (std::abs(step) >= std::numbers::pi - 1e-12)
            throw Error(ErrorKind::AmbiguousWinding, "angular step reaches pi; sample more densely");
        total += step;
    }
    return total / (2.0 * std::numbers::pi);
}

int winding_number(std::span<const Complex> samples) {
    const double turns = winding_turns(samples);
    const double nearest = std::round(turns);
    if (std::abs(turns - nearest) > 0.05)
        throw Error(ErrorKind::AmbiguousWinding, "winding " + std::to_string(turns) + " is not near an integer");
    return static_cast<int>(nearest);
}

int slice_map_winding(const std::function<Element(const Element&)>& f, const ComplexSlice& slice,
                      int samples) {
    if (samples < 8) throw Error(ErrorKind::InvalidArgument, "too few samples");
    std::vector<Complex> image;
    image.reserve(static_cast<std::size_t>(samples) + 1);
    for (int j = 0; j < samples; ++j) {
        const double t = 2.0 * std::numbers::pi * j / samples;
        image.push_back(slice_project(f(slice_embed(std::cos(t), std::sin(t), slice)), slice));
    }
    image.push_back(image.front());
    return winding_number(image);
}

int power_map_winding(int k, const ComplexSlice& slice, int samples) {
    if (k == 0) throw Error(ErrorKind::InvalidArgument, "power map winding needs k != 0");
    if (samples < 64) throw Error(ErrorKind::InvalidArgument, "power map winding needs >= 64 samples");
    return slice_map_winding([k](const Element& x) { return power_int(x, k); }, slice, samples);
}

}  // namespace cd::poly

#include "deckscan/vision/gradient.hpp"

#include <algorithm>
#include <cmath>

namespace deckscan::vision {

namespace {

constexpr Kernel3 kL0{{{1, 0, -1}, {1, 0, -1}, {1, 0, -1}}};
constexpr Kernel3 kL1{{{0, -1, -1}, {1, 0, -1}, {1, 1, 0}}};
constexpr Kernel3 kL2{{{-1, -1, -1}, {0, 0, 0}, {1, 1, 1}}};
constexpr Kernel3 kL3{{{-1, -1, 0}, {-1, 0, 1}, {0, 1, 1}}};
// Opposite direction of k = 3; the center-row signs make it zero-sum
// like every other kernel, so constant regions respond with zero.
constexpr Kernel3 kL7{{{1, 1, 0}, {1, 0, -1}, {0, -1, -1}}};

constexpr Kernel3 transpose(const Kernel3& k) {
    Kernel3 t{};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) t[r][c] = k[c][r];
    return t;
}

constexpr Kernel3 negate(const Kernel3& k) {
    Kernel3 n{};
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) n[r][c] = -k[r][c];
    return n;
}

}  // namespace

std::array<Kernel3, 8> gradient_kernels(bool rotation_consistent) {
    std::array<Kernel3, 8> ks{kL0, kL1, kL2, kL3, transpose(kL2), transpose(kL1),
                              transpose(kL2), kL7};
    if (rotation_consistent) ks[6] = negate(kL2);
    return ks;
}

Grid<double> convolve3(const Grid<double>& img, const Kernel3& kernel) {
    if (img.width < 3 || img.height < 3)
        throw invalid_input_error("convolve3: image must be at least 3x3");
    Grid<double> out(img.width, img.height);
    for (int y = 0; y < img.height; ++y) {
        for (int x = 0; x < img.width; ++x) {
            double acc = 0.0;
            for (int r = 0; r < 3; ++r) {
                const int yy = std::clamp(y + r - 1, 0, img.height - 1);
                for (int c = 0; c < 3; ++c) {
                    const int xx = std::clamp(x + c - 1, 0, img.width - 1);
                    acc += kernel[r][c] * img.at(xx, yy);
                }
            }
            out.at(x, y) = acc;
        }
    }
    return out;
}

std::array<Grid<double>, 8> directional_gradients(const GrayImage& img,
                                                  bool rotation_consistent) {
    if (img.width() < 3 || img.height() < 3)
        throw invalid_input_error("directional_gradients: image must be at least 3x3");
    const auto kernels = gradient_kernels(rotation_consistent);
    std::array<Grid<double>, 8> responses;
    for (int k = 0; k < 8; ++k) responses[k] = convolve3(img.intensity, kernels[k]);
    return responses;
}

GradientField gradient_magnitude_orientation(const std::array<Grid<double>, 8>& responses) {
    const int w = responses[0].width;
    const int h = responses[0].height;
    for (const auto& r : responses)
        if (r.width != w || r.height != h)
            throw invalid_input_error("gradient_magnitude_orientation: response shapes differ");

    GradientField field;
    field.magnitude = Grid<double>(w, h);
    field.orientation = Grid<std::uint8_t>(w, h);
    for (std::size_t i = 0; i < field.magnitude.size(); ++i) {
        double best = -1.0;
        std::uint8_t arg = 0;
        for (std::uint8_t k = 0; k < 8; ++k) {
            const double v = std::abs(responses[k].data[i]);
            if (v > best) {
                best = v;
                arg = k;
            }
        }
        field.magnitude.data[i] = best;
        field.orientation.data[i] = arg;
    }
    return field;
}

}  // namespace deckscan::vision

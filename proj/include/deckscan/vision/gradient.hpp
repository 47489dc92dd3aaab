#pragma once

#include <array>
#include <cstdint>

#include "deckscan/vision/image.hpp"

namespace deckscan::vision {

using Kernel3 = std::array<std::array<int, 3>, 3>;

/// The eight 3x3 directional gradient kernels, ordered by orientation
/// theta = k*pi/4, k = 0..7. Five are explicit; k = 4, 5, 6 are the
/// transposes of k = 2, 1, 2 respectively, which makes k = 6 a duplicate
/// of k = 4. Passing rotation_consistent = true swaps in the negated
/// k = 2 kernel for k = 6 so the set covers all eight directions.
std::array<Kernel3, 8> gradient_kernels(bool rotation_consistent = false);

/// Per-pixel gradient magnitude (largest absolute kernel response) and
/// orientation index (argmax k, ties to the smallest k).
struct GradientField {
    Grid<double> magnitude;
    Grid<std::uint8_t> orientation;  // k in 0..7, theta = k*pi/4
};

/// 3x3 kernel response with replicate-edge padding.
Grid<double> convolve3(const Grid<double>& img, const Kernel3& kernel);

/// All eight directional responses. The image must be at least 3x3.
std::array<Grid<double>, 8> directional_gradients(const GrayImage& img,
                                                  bool rotation_consistent = false);

GradientField gradient_magnitude_orientation(const std::array<Grid<double>, 8>& responses);

}  // namespace deckscan::vision

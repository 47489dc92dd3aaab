#pragma once

#include <cstdint>
#include <vector>

#include "deckscan/geometry.hpp"
#include "deckscan/vision/image.hpp"

namespace deckscan::vision {

/// Generator settings for the synthetic crack corpus: textured concrete
/// background with a brightness gradient, meandering dark cracks with a
/// soft cross-profile, and salt-and-pepper speckle.
struct CorpusParams {
    int count = 50;
    int width = 320;
    int height = 240;
    double scale_m_per_px = 1.0e-3;
    std::uint64_t seed = 42;

    int min_cracks = 1;
    int max_cracks = 3;
    double background_level = 175.0;
    double background_gradient = 35.0;   // max brightness tilt corner to corner
    double texture_sigma = 8.0;
    double crack_depth_min = 90.0;       // darkening at the crack core
    double crack_depth_max = 130.0;
    double crack_sigma_min_px = 0.9;     // cross-profile width
    double crack_sigma_max_px = 1.6;
    double truth_fraction = 0.1;         // darkening >= fraction*depth is crack truth
    double salt_pepper_fraction = 4e-4;  // each, per pixel
    double pepper_min = 70.0;
    double pepper_max = 105.0;
};

struct CorpusImage {
    GrayImage image;
    Mask truth;
    std::vector<std::vector<Vec2>> polylines;  // px coordinates
    double total_length_px = 0.0;
};

/// Deterministic per-index sample; the same params and index always
/// produce the same image.
CorpusImage make_corpus_image(const CorpusParams& params, int index);

}  // namespace deckscan::vision

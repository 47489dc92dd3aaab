#pragma once

#include <optional>
#include <vector>

#include "deckscan/vision/gradient.hpp"
#include "deckscan/vision/image.hpp"
#include "deckscan/vision/linking.hpp"
#include "deckscan/vision/regions.hpp"
#include "deckscan/vision/stats.hpp"

namespace deckscan::vision {

struct CrackVisionParams {
    std::optional<double> fixed_tau;    // empty: automatic threshold
    double majority_fraction = 5.0 / 8.0;
    int clean_passes = 2;
    LinkingParams linking;
    int min_component_pixels = 20;
    DenoiseParams denoise;
    bool rotation_consistent_kernels = false;
    int max_spur_px = 6;
    double simplify_tolerance_px = 1.5;
    int width_sample_step_px = 5;
};

struct CrackDetection {
    Mask mask;                     // final crack pixels
    std::vector<CrackPath> paths;  // measured chains
};

/// Full detection chain: directional gradients, magnitude threshold,
/// neighborhood cleanup, skeleton chain linking, small-component and
/// region-pair noise removal, then per-path measurement.
CrackDetection detect_cracks(const GrayImage& img, const CrackVisionParams& params);

struct PixelScore {
    double precision = 0.0;
    double recall = 0.0;
    long true_positives = 0;
    long detected = 0;
    long actual = 0;
};

PixelScore score_detection(const Mask& detected, const Mask& truth);

}  // namespace deckscan::vision

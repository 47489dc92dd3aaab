#pragma once

#include <vector>

#include "deckscan/vision/image.hpp"
#include "deckscan/vision/linking.hpp"

namespace deckscan::vision {

/// 8-connected component with its centroid and pixel-count area.
struct CrackRegion {
    std::vector<PixelCoord> pixels;
    double centroid_x = 0.0;
    double centroid_y = 0.0;
    int area = 0;
};

struct DenoiseParams {
    double t_d_px = 30.0;  // centroid-distance threshold
    double t_a_px = 40.0;  // area threshold, pixels
};

std::vector<CrackRegion> extract_regions(const Mask& mask);

/// Centroid distance between two regions.
double region_distance(const CrackRegion& a, const CrackRegion& b);

/// Removes every region that is both small (area < T_a) and close to
/// another region (nearest-centroid distance < T_d), judged against the
/// input set simultaneously. A lone region is always kept.
std::vector<CrackRegion> remove_noise_by_region(const std::vector<CrackRegion>& regions,
                                                const DenoiseParams& params);

Mask regions_to_mask(const std::vector<CrackRegion>& regions, int width, int height);

}  // namespace deckscan::vision

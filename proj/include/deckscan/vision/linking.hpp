#pragma once

#include <vector>

#include "deckscan/geometry.hpp"
#include "deckscan/vision/image.hpp"

namespace deckscan::vision {

struct PixelCoord {
    int x = 0;
    int y = 0;
    bool operator==(const PixelCoord&) const = default;
};

/// Measured widths along a path, with the locations of the extremes
/// (in pixel coordinates, converted to meters by the caller's scale).
struct WidthProfile {
    double mean_m = 0.0;
    double max_m = 0.0;
    double min_m = 0.0;
    Vec2 max_loc_px;
    Vec2 min_loc_px;
};

/// Ordered 8-connected pixel chain; the endpoints are the chain ends.
struct CrackPath {
    std::vector<PixelCoord> pixels;
    double length_m = 0.0;
    WidthProfile width;

    PixelCoord front() const { return pixels.front(); }
    PixelCoord back() const { return pixels.back(); }
};

struct LinkingParams {
    int window_px = 21;                 // square scanning window side
    double max_link_distance_px = 15.0; // endpoint gate, Euclidean
    double k_p = 1.0;
    double k_d = 0.5;
};

/// Chains extracted from a skeleton mask: per 8-connected component, the
/// longest endpoint-to-endpoint walk (side branches are dropped from the
/// chain but stay in the mask).
std::vector<CrackPath> extract_paths(const Mask& skeleton);

/// Linking cost K_p * |e_i - e_j| + K_d between two endpoints.
double link_cost(const Vec2& endpoint_j, const Vec2& endpoint_i, double k_p, double k_d);

/// Straight 8-connected run of pixels between two coordinates, endpoints
/// excluded.
std::vector<PixelCoord> bresenham_bridge(PixelCoord a, PixelCoord b);

/// Greedy cost-minimal endpoint linking: for each path, candidate
/// endpoints of other paths inside the scanning window and within the
/// distance gate are scored, the cheapest is merged over a straight
/// pixel bridge, and the scan repeats until no candidate remains.
/// Ties resolve to the lowest path index. Never increases the path count.
std::vector<CrackPath> link_cracks(std::vector<CrackPath> paths, const LinkingParams& params);

}  // namespace deckscan::vision

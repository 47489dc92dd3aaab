#pragma once

#include <vector>

#include "deckscan/geometry.hpp"
#include "deckscan/vision/image.hpp"
#include "deckscan/vision/linking.hpp"

namespace deckscan::vision {

/// Ramer-Douglas-Peucker simplification, tolerance in the input units.
std::vector<Vec2> simplify_polyline(const std::vector<Vec2>& points, double tolerance);

double polyline_length(const std::vector<Vec2>& points);

/// Chain vectorized to a polyline (pixel coordinates). Lengths are
/// measured on the simplified polyline, which keeps straight runs exact
/// and bounds the staircase overestimate of raw 8-connected steps.
std::vector<Vec2> path_polyline(const CrackPath& path, double tolerance_px);

/// Width sampled every sample_step chain pixels: the set-pixel run
/// through the sample perpendicular to the local tangent, scaled to
/// meters.
WidthProfile estimate_width(const CrackPath& path, const Mask& mask, double scale_m_per_px,
                            int sample_step_px = 5);

/// Fills length and width measurements on each path.
void measure_paths(std::vector<CrackPath>& paths, const Mask& mask, double scale_m_per_px,
                   double simplify_tolerance_px, int width_sample_step_px);

/// Summary in the shape of a deck-survey crack table: totals, extremes,
/// and where the extremes sit (meters, input frame).
struct CrackStatistics {
    bool empty = true;
    int crack_count = 0;
    double total_length_m = 0.0;
    double longest_m = 0.0;
    double shortest_m = 0.0;
    double max_width_m = 0.0;
    double min_width_m = 0.0;
    Vec2 longest_loc_m;
    Vec2 shortest_loc_m;
    Vec2 max_width_loc_m;
    Vec2 min_width_loc_m;
};

/// Paths must already be measured (measure_paths).
CrackStatistics crack_statistics(const std::vector<CrackPath>& paths, double scale_m_per_px);

}  // namespace deckscan::vision

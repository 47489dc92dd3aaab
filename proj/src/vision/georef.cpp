#include "deckscan/vision/georef.hpp"

#include <cmath>

namespace deckscan::vision {

Vec2 georeference(int u, int v, int image_width, int image_height, const Pose2D& station_pose,
                  const CameraModel& camera) {
    if (u < 0 || u >= image_width || v < 0 || v >= image_height)
        throw invalid_input_error("georeference: pixel outside the image");
    if (!(camera.footprint_along_m > 0.0) || !(camera.footprint_cross_m > 0.0))
        throw invalid_input_error("georeference: footprint must be positive");

    const double along =
        (0.5 - (v + 0.5) / image_height) * camera.footprint_along_m + camera.body_offset_m.x;
    const double left =
        (0.5 - (u + 0.5) / image_width) * camera.footprint_cross_m + camera.body_offset_m.y;
    const double c = std::cos(station_pose.heading);
    const double s = std::sin(station_pose.heading);
    return {station_pose.x + c * along - s * left, station_pose.y + s * along + c * left};
}

bool tile_row_kept(int v, int image_height, const CameraModel& camera, bool first_on_lane) {
    if (first_on_lane) return true;
    // Rear rows (large v) view the ground already covered by the
    // previous tile.
    const int cutoff = static_cast<int>(std::floor(image_height * (1.0 - camera.overlap_fraction)));
    return v < cutoff;
}

}  // namespace deckscan::vision

#pragma once

#include <string>
#include <vector>

#include "deckscan/geometry.hpp"
#include "deckscan/vision/image.hpp"

namespace deckscan::vision {

/// Downward camera rigidly mounted on the robot body (x forward,
/// y left). The along-track footprint exceeds the station stride so
/// consecutive tiles overlap; the overlap band is cropped from the
/// trailing tile when tiles are mosaicked by pose.
struct CameraModel {
    double footprint_along_m = 0.871;   // rows span this much track
    double footprint_cross_m = 1.8288;  // columns span this much swath
    Vec2 body_offset_m{0.0, 0.0};       // camera center in body frame
    double overlap_fraction = 0.30;
};

/// Deck-frame position of a pixel center seen from a station pose.
/// Row 0 looks forward along the heading, column 0 to the left.
Vec2 georeference(int u, int v, int image_width, int image_height, const Pose2D& station_pose,
                  const CameraModel& camera);

/// Rows of a tile that survive mosaicking: every tile after the first
/// on a lane loses its rearmost overlap_fraction of rows to the tile
/// behind it.
bool tile_row_kept(int v, int image_height, const CameraModel& camera, bool first_on_lane);

/// One georeferenced crack for the deck-wide map.
struct CrackMapEntry {
    int id = 0;
    double length_m = 0.0;
    double mean_width_m = 0.0;
    double max_width_m = 0.0;
    std::vector<Vec2> polyline_m;  // deck frame
    std::string source;            // image tile the crack came from
};

}  // namespace deckscan::vision

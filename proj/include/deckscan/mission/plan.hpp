#pragma once

#include <vector>

#include "deckscan/geometry.hpp"
#include "deckscan/mission/deck.hpp"

namespace deckscan::mission {

enum class MissionMode { non_stop, stop_move };

/// Speed profile of the virtual (reference) robot.
struct MotionSettings {
    double cruise_speed = 0.5;      // m/s along scan lines
    double accel = 0.25;            // m/s^2 ramp for hops and lane entries; <= 0 means instant
    double dwell_s = 4.5;           // stop-move: measurement dwell per station
    double turn_duration_s = 20.0;  // time budget for the omni lane change
};

struct ScanLine {
    Vec2 start;
    Vec2 stop;

    Vec2 direction() const {
        const Vec2 d = stop - start;
        const double n = d.norm();
        return (n > 0.0) ? d * (1.0 / n) : Vec2{1.0, 0.0};
    }
    double length() const { return (stop - start).norm(); }
    double heading() const {
        const Vec2 d = direction();
        return std::atan2(d.y, d.x);
    }
};

struct MissionPlan {
    std::vector<ScanLine> scan_lines;
    std::vector<Vec2> safe_waypoints;  // two per lane change: current lane end, next lane start
    MissionMode mode = MissionMode::stop_move;
    double station_spacing = 2.0 * kFoot;
    MotionSettings motion;
};

/// A station position the plan intends to measure at; realized stations
/// come out of the simulator.
struct PlannedStation {
    int lane = 0;
    int index_on_lane = 0;
    int global_index = 0;
    Vec2 position;
    double heading = 0.0;
};

/// Realized measurement station emitted by the simulator. The pose is
/// the estimated (localization) pose at capture time.
struct Station {
    int index = 0;
    Pose2D pose;
    double timestamp = 0.0;
    int scan_line = 0;
};

/// Number of boustrophedon passes needed to cover the deck.
int lane_count(const DeckSpec& deck);

/// Lateral (y) center of each pass.
std::vector<double> lane_positions(const DeckSpec& deck);

/// Stations per scan line at the given spacing (both end stations included).
int stations_per_line(double line_length, double spacing);

/// Boustrophedon coverage plan: full-length scan lines at the lane
/// positions, alternating direction, with a pair of safe waypoints at
/// every lane change for the omni maneuver.
MissionPlan plan_lawnmower(const DeckSpec& deck, MissionMode mode, const MotionSettings& motion,
                           double station_spacing = 2.0 * kFoot);

std::vector<PlannedStation> planned_stations(const MissionPlan& plan);

}  // namespace deckscan::mission

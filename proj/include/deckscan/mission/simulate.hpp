#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "deckscan/geometry.hpp"
#include "deckscan/mission/plan.hpp"
#include "deckscan/mission/timeline.hpp"
#include "deckscan/nav/omni.hpp"
#include "deckscan/nav/tracking.hpp"

namespace deckscan::mission {

/// Stand-in for the localization filter: white Gaussian error added to
/// the true pose before the controllers see it.
struct NoiseModel {
    double pose_sigma = 0.0;     // m, per axis
    double heading_sigma = 0.0;  // rad
    std::uint64_t seed = 1;
};

/// How PD gains for the omni maneuver are chosen at waypoint activation.
struct GainsPolicy {
    enum class Kind { displacement_scaled, fixed };
    Kind kind = Kind::displacement_scaled;
    double desired_speed = 0.5;      // m/s at maneuver start
    double k_offset = 0.1;
    double min_displacement = 0.01;  // m, floor for axis displacements
    nav::PDGains fixed_gains;        // used when kind == fixed
};

struct SimulationSettings {
    double dt = 0.01;              // s, explicit Euler step
    double capture_radius = 0.05;  // m, station capture tolerance
    std::optional<Pose2D> initial_pose;  // default: start of the first scan line
};

struct PoseLogRow {
    double t = 0.0;
    Pose2D true_pose;
    Pose2D est_pose;
    double cmd_speed = 0.0;    // commanded speed magnitude
    double cmd_heading = 0.0;  // commanded velocity direction
};

struct SimulationResult {
    std::vector<PoseLogRow> log;
    std::vector<Station> stations;
    double duration = 0.0;  // realized mission time, s
};

/// Closed-loop mission: the robot tracks the virtual robot with the
/// linear nav law along scans and runs the PD omni maneuver through the
/// safe waypoints at lane changes, holding its heading there. Station
/// records are emitted for every planned station the robot holds within
/// the capture radius for the full dwell (stop-move) or passes within
/// the capture radius (non-stop). Identical seeds reproduce identical
/// results bit for bit.
SimulationResult simulate_mission(const MissionPlan& plan, const nav::ControllerParams& params,
                                  const GainsPolicy& gains, const NoiseModel& noise,
                                  const SimulationSettings& settings = {});

}  // namespace deckscan::mission

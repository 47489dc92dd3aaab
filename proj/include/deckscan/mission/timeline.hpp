#pragma once

#include <vector>

#include "deckscan/geometry.hpp"
#include "deckscan/mission/plan.hpp"

namespace deckscan::mission {

/// Kinematic state of the virtual robot at some instant.
struct VirtualState {
    Vec2 position;
    Velocity2D velocity;
    double heading = 0.0;
};

/// Speed profile for one straight move: symmetric accelerate/cruise/
/// decelerate, or constant speed when no acceleration limit is set.
struct MoveProfile {
    double distance = 0.0;
    double cruise = 0.0;
    double accel = 0.0;  // <= 0: instant speed changes

    double duration() const;
    double position_at(double tau) const;  // arclength from the start
    double speed_at(double tau) const;
};

/// Precomputed schedule of the virtual robot: dwell / move / turn
/// segments laid end to end. Turn segments park the virtual robot at
/// the next lane start while the physical robot performs the omni
/// maneuver through the safe waypoints.
class MissionTimeline {
public:
    struct Segment {
        enum class Kind { dwell, move, turn };
        Kind kind = Kind::move;
        double t0 = 0.0;
        double t1 = 0.0;
        int lane = 0;        // active (or upcoming, for turns) scan line
        Vec2 from;
        Vec2 to;
        double heading = 0.0;
        int station = -1;    // global station index for dwell segments
        int turn_index = -1; // lane-change ordinal for turn segments
        MoveProfile profile; // move segments only
    };

    explicit MissionTimeline(const MissionPlan& plan);

    double duration() const { return segments_.empty() ? 0.0 : segments_.back().t1; }
    const std::vector<Segment>& segments() const { return segments_; }

    /// Segment active at time t (clamped to the final segment).
    const Segment& segment_at(double t) const;

    VirtualState state_at(double t) const;

private:
    std::vector<Segment> segments_;
};

/// Position, velocity, and heading of the virtual robot at time t >= 0.
/// Times beyond the mission end clamp to the final pose at rest.
VirtualState virtual_trajectory(const MissionPlan& plan, double t);

}  // namespace deckscan::mission

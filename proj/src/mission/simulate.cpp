#include "deckscan/mission/simulate.hpp"

#include <cmath>
#include <deque>

#include "deckscan/errors.hpp"
#include "deckscan/rng.hpp"

namespace deckscan::mission {

namespace {

struct OmniState {
    int turn_index = -1;     // which lane change we are configured for
    int waypoint_stage = 0;  // 0: lane end, 1: next lane start
    double phi = 0.0;        // frame angle, fixed at activation
    nav::PDGains gains;
    Vec2 e_prev;
    bool active = false;
    bool needs_activation = true;
};

// Monotone growth of the tracking distance over a 10 s window.
class DivergenceMonitor {
public:
    void sample(double t, double dist) {
        if (!std::isfinite(dist) || dist > 1e9)
            throw simulation_diverged_error("simulate_mission: tracking distance blew up");
        if (t < next_sample_t_) return;
        next_sample_t_ = t + 1.0;
        window_.push_back(dist);
        if (window_.size() > 11) window_.pop_front();
        if (window_.size() == 11) {
            // Growth counts only once the distance is clearly away from
            // convergence; a mode switch can jump one sample from ~zero.
            bool growing = window_.front() > 1e-3 && window_.back() > window_.front() + 0.1;
            for (std::size_t i = 1; growing && i < window_.size(); ++i)
                growing = window_[i] > window_[i - 1];
            if (growing)
                throw simulation_diverged_error(
                    "simulate_mission: tracking distance grew for 10 s");
        }
    }

private:
    std::deque<double> window_;
    double next_sample_t_ = 0.0;
};

}  // namespace

SimulationResult simulate_mission(const MissionPlan& plan, const nav::ControllerParams& params,
                                  const GainsPolicy& gains, const NoiseModel& noise,
                                  const SimulationSettings& settings) {
    params.validate();
    if (!(settings.dt > 0.0) || settings.dt > 0.1)
        throw invalid_input_error("simulate_mission: dt must lie in (0, 0.1]");
    if (plan.scan_lines.empty()) throw planning_error("simulate_mission: empty plan");
    if (!(noise.pose_sigma >= 0.0) || !(noise.heading_sigma >= 0.0))
        throw invalid_input_error("simulate_mission: noise sigmas must be nonnegative");

    const MissionTimeline timeline(plan);
    const std::vector<PlannedStation> stations = planned_stations(plan);
    const double dt = settings.dt;
    const double t_end = timeline.duration();

    Rng rng(noise.seed);
    SimulationResult result;
    result.log.reserve(static_cast<std::size_t>(t_end / dt) + 2);

    Pose2D true_pose = settings.initial_pose.value_or(
        Pose2D{plan.scan_lines[0].start.x, plan.scan_lines[0].start.y,
               plan.scan_lines[0].heading()});

    OmniState omni;
    DivergenceMonitor divergence;

    // Dwell-capture bookkeeping: the robot must stay inside the capture
    // radius for the entire dwell segment of a station.
    std::size_t seg_idx = 0;
    bool dwell_ok = true;
    // Non-stop capture bookkeeping: stations pass in order along a lane.
    std::size_t next_station = 0;

    const auto& segs = timeline.segments();

    auto emit_station = [&](const PlannedStation& ps, const Pose2D& est, double when) {
        result.stations.push_back({ps.global_index, est, when, ps.lane});
    };

    auto finish_segment = [&](const MissionTimeline::Segment& seg, const Pose2D& est,
                              double when) {
        if (seg.kind == MissionTimeline::Segment::Kind::dwell && dwell_ok &&
            plan.mode == MissionMode::stop_move)
            emit_station(stations[seg.station], est, when);
        dwell_ok = true;
    };

    const long total_steps = static_cast<long>(std::ceil(t_end / dt));
    for (long step = 0; step <= total_steps; ++step) {
        const double t = step * dt;
        Pose2D est{true_pose.x + rng.gauss(noise.pose_sigma),
                   true_pose.y + rng.gauss(noise.pose_sigma),
                   true_pose.heading + rng.gauss(noise.heading_sigma)};

        // Advance the active segment, settling dwell captures as they close.
        while (seg_idx + 1 < segs.size() && t >= segs[seg_idx].t1) {
            finish_segment(segs[seg_idx], est, segs[seg_idx].t1);
            ++seg_idx;
        }
        const MissionTimeline::Segment& seg = segs[seg_idx];

        Vec2 world_vel;
        double cmd_speed = 0.0;
        double cmd_heading = 0.0;
        double new_heading = true_pose.heading;

        if (seg.kind == MissionTimeline::Segment::Kind::turn && t < seg.t1) {
            // Omni maneuver: PD toward the safe waypoints, heading held.
            if (!omni.active || omni.turn_index != seg.turn_index) {
                omni = OmniState{};
                omni.active = true;
                omni.turn_index = seg.turn_index;
                omni.waypoint_stage = 0;
            }
            const Vec2 waypoint = plan.safe_waypoints[2 * seg.turn_index + omni.waypoint_stage];
            if (omni.needs_activation) {
                omni.phi = std::atan2(waypoint.y - est.y, waypoint.x - est.x);
                if (gains.kind == GainsPolicy::Kind::fixed) {
                    omni.gains = gains.fixed_gains;
                } else {
                    // Gains live in the maneuver frame, where the initial
                    // displacement is (|delta|, 0): full approach speed on
                    // the x axis, derivative-only damping across it.
                    const Pose2D frame_origin{0.0, 0.0, 0.0};
                    const Vec2 frame_goal{distance(est.position(), waypoint), 0.0};
                    omni.gains = nav::select_pd_gains_floored(gains.desired_speed, frame_origin,
                                                              frame_goal, gains.k_offset,
                                                              gains.min_displacement);
                }
                omni.e_prev = nav::omni_error(est, waypoint, omni.phi);
                omni.needs_activation = false;
            }
            const Vec2 e = nav::omni_error(est, waypoint, omni.phi);
            const Vec2 v_frame = nav::pd_speed_command(e, omni.e_prev, omni.gains);
            omni.e_prev = e;
            const double c = std::cos(omni.phi), s = std::sin(omni.phi);
            world_vel = {c * v_frame.x - s * v_frame.y, s * v_frame.x + c * v_frame.y};
            cmd_speed = world_vel.norm();
            cmd_heading = (cmd_speed > 0.0) ? std::atan2(world_vel.y, world_vel.x) : 0.0;
            divergence.sample(t, distance(est.position(), waypoint));
            if (omni.waypoint_stage == 0 &&
                distance(est.position(), waypoint) <= settings.capture_radius) {
                omni.waypoint_stage = 1;
                omni.needs_activation = true;
            }
        } else {
            omni.active = false;
            const VirtualState target = timeline.state_at(std::min(t, t_end));
            const Pose2D target_pose{target.position.x, target.position.y, target.heading};
            const nav::LinearNavCommand cmd =
                nav::linear_nav_command(est, target_pose, target.velocity.speed(), params.lambda);
            world_vel = {cmd.speed * std::cos(cmd.heading), cmd.speed * std::sin(cmd.heading)};
            cmd_speed = cmd.speed;
            cmd_heading = cmd.heading;
            new_heading = cmd.heading;
            divergence.sample(t, distance(est.position(), target.position));
        }

        // Capture checks against the planned station positions.
        if (plan.mode == MissionMode::stop_move) {
            if (seg.kind == MissionTimeline::Segment::Kind::dwell && t < seg.t1 && dwell_ok) {
                const PlannedStation& ps = stations[seg.station];
                if (distance(true_pose.position(), ps.position) > settings.capture_radius)
                    dwell_ok = false;
            }
        } else {
            while (next_station < stations.size()) {
                const PlannedStation& ps = stations[next_station];
                if (distance(true_pose.position(), ps.position) <= settings.capture_radius) {
                    emit_station(ps, est, t);
                    ++next_station;
                    continue;
                }
                // Declare a station missed once the robot is well past it.
                const ScanLine& line = plan.scan_lines[ps.lane];
                const double progress = (true_pose.position() - line.start).dot(line.direction());
                if (seg.lane > ps.lane ||
                    (seg.lane == ps.lane &&
                     progress > ps.index_on_lane * plan.station_spacing + plan.station_spacing))
                    ++next_station;
                else
                    break;
            }
        }

        result.log.push_back({t, true_pose, est, cmd_speed, cmd_heading});

        if (step == total_steps) break;
        true_pose = Pose2D{true_pose.x + world_vel.x * dt, true_pose.y + world_vel.y * dt,
                           new_heading};
    }

    // The mission ends inside the final dwell; settle it.
    if (!segs.empty() && seg_idx == segs.size() - 1)
        finish_segment(segs.back(), result.log.back().est_pose, t_end);

    result.duration = t_end;
    return result;
}

}  // namespace deckscan::mission

#include "deckscan/mission/timeline.hpp"

#include <algorithm>
#include <cmath>

#include "deckscan/errors.hpp"

namespace deckscan::mission {

double MoveProfile::duration() const {
    if (distance <= 0.0) return 0.0;
    if (accel <= 0.0) return distance / cruise;
    const double ramp_dist = cruise * cruise / accel;  // accel + decel combined
    if (ramp_dist >= distance) return 2.0 * std::sqrt(distance / accel);  // triangular
    return distance / cruise + cruise / accel;
}

double MoveProfile::position_at(double tau) const {
    if (distance <= 0.0) return 0.0;
    const double T = duration();
    tau = std::clamp(tau, 0.0, T);
    if (accel <= 0.0) return cruise * tau;
    const double ramp_dist = cruise * cruise / accel;
    if (ramp_dist >= distance) {
        const double half = T / 2.0;
        if (tau <= half) return 0.5 * accel * tau * tau;
        const double rem = T - tau;
        return distance - 0.5 * accel * rem * rem;
    }
    const double t_ramp = cruise / accel;
    if (tau <= t_ramp) return 0.5 * accel * tau * tau;
    if (tau >= T - t_ramp) {
        const double rem = T - tau;
        return distance - 0.5 * accel * rem * rem;
    }
    return 0.5 * accel * t_ramp * t_ramp + cruise * (tau - t_ramp);
}

double MoveProfile::speed_at(double tau) const {
    if (distance <= 0.0) return 0.0;
    const double T = duration();
    if (tau < 0.0 || tau > T) return 0.0;
    if (accel <= 0.0) return cruise;
    const double ramp_dist = cruise * cruise / accel;
    if (ramp_dist >= distance) {
        const double half = T / 2.0;
        return accel * (tau <= half ? tau : T - tau);
    }
    const double t_ramp = cruise / accel;
    if (tau <= t_ramp) return accel * tau;
    if (tau >= T - t_ramp) return accel * (T - tau);
    return cruise;
}

MissionTimeline::MissionTimeline(const MissionPlan& plan) {
    double t = 0.0;
    int global_station = 0;
    int turn_ordinal = 0;

    auto push = [&](Segment s) {
        s.t0 = t;
        t = s.t1 = t + std::max(0.0, s.t1);
        segments_.push_back(s);
    };

    for (std::size_t lane = 0; lane < plan.scan_lines.size(); ++lane) {
        const ScanLine& line = plan.scan_lines[lane];
        const Vec2 dir = line.direction();
        const double heading = line.heading();

        if (plan.mode == MissionMode::stop_move) {
            const int n = stations_per_line(line.length(), plan.station_spacing);
            for (int j = 0; j < n; ++j) {
                const Vec2 here = line.start + dir * (j * plan.station_spacing);
                Segment dwell;
                dwell.kind = Segment::Kind::dwell;
                dwell.t1 = plan.motion.dwell_s;
                dwell.lane = static_cast<int>(lane);
                dwell.from = dwell.to = here;
                dwell.heading = heading;
                dwell.station = global_station++;
                push(dwell);

                if (j + 1 < n) {
                    Segment hop;
                    hop.kind = Segment::Kind::move;
                    hop.lane = static_cast<int>(lane);
                    hop.from = here;
                    hop.to = line.start + dir * ((j + 1) * plan.station_spacing);
                    hop.heading = heading;
                    hop.profile = {(hop.to - hop.from).norm(), plan.motion.cruise_speed,
                                   plan.motion.accel};
                    hop.t1 = hop.profile.duration();
                    push(hop);
                }
            }
        } else {
            Segment move;
            move.kind = Segment::Kind::move;
            move.lane = static_cast<int>(lane);
            move.from = line.start;
            move.to = line.stop;
            move.heading = heading;
            move.profile = {line.length(), plan.motion.cruise_speed, plan.motion.accel};
            move.t1 = move.profile.duration();
            push(move);
        }

        if (lane + 1 < plan.scan_lines.size()) {
            Segment turn;
            turn.kind = Segment::Kind::turn;
            turn.t1 = plan.motion.turn_duration_s;
            turn.lane = static_cast<int>(lane + 1);
            turn.from = turn.to = plan.scan_lines[lane + 1].start;
            turn.heading = plan.scan_lines[lane + 1].heading();
            turn.turn_index = turn_ordinal++;
            push(turn);
        }
    }
}

const MissionTimeline::Segment& MissionTimeline::segment_at(double t) const {
    if (segments_.empty()) throw invalid_input_error("MissionTimeline: empty plan");
    auto it = std::upper_bound(segments_.begin(), segments_.end(), t,
                               [](double v, const Segment& s) { return v < s.t1; });
    if (it == segments_.end()) return segments_.back();
    return *it;
}

VirtualState MissionTimeline::state_at(double t) const {
    if (!(t >= 0.0)) throw invalid_input_error("virtual trajectory: t must be nonnegative");
    const Segment& s = segment_at(t);
    VirtualState out;
    out.heading = s.heading;
    if (t >= s.t1 || s.kind != Segment::Kind::move) {
        out.position = (t >= s.t1) ? s.to : s.from;
        out.velocity = {0.0, 0.0};
        return out;
    }
    const double tau = t - s.t0;
    const double len = (s.to - s.from).norm();
    const Vec2 dir = (len > 0.0) ? (s.to - s.from) * (1.0 / len) : Vec2{1.0, 0.0};
    out.position = s.from + dir * s.profile.position_at(tau);
    const double v = s.profile.speed_at(tau);
    out.velocity = {v * dir.x, v * dir.y};
    return out;
}

VirtualState virtual_trajectory(const MissionPlan& plan, double t) {
    return MissionTimeline(plan).state_at(t);
}

}  // namespace deckscan::mission

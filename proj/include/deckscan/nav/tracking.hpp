#pragma once

#include <algorithm>
#include <cmath>

#include "deckscan/errors.hpp"
#include "deckscan/geometry.hpp"

namespace deckscan::nav {

/// Gain of the attractive potential field pulling the robot toward the
/// virtual (reference) robot. Units 1/s.
struct ControllerParams {
    double lambda = 0.05;

    void validate() const {
        if (!(lambda > 0.0) || !std::isfinite(lambda))
            throw invalid_input_error("ControllerParams: lambda must be positive and finite");
    }
};

/// Relative position of the virtual robot seen from the actual robot,
/// plus the bearing angle phi toward it. When the two coincide, phi
/// degenerates to the virtual robot's heading so the tracking command
/// stays continuous at convergence.
struct RelativeState {
    Vec2 q_rv;
    double phi = 0.0;
};

/// Speed/heading command for the straight-scan tracking mode.
struct LinearNavCommand {
    double speed = 0.0;    // m/s, nonnegative
    double heading = 0.0;  // rad, in (-pi, pi]
};

namespace detail {
inline void require_finite(const Vec2& v, const char* what) {
    if (!v.finite()) throw invalid_input_error(std::string(what) + ": non-finite input");
}
inline void require_lambda(double lambda) {
    if (!(lambda > 0.0) || !std::isfinite(lambda))
        throw invalid_input_error("lambda must be positive and finite");
}
}  // namespace detail

/// Quadratic attractive potential 0.5 * lambda * |q_rv|^2.
/// Nonnegative, zero only when the robots coincide.
inline double attractive_potential(const Vec2& q_rv, double lambda) {
    detail::require_finite(q_rv, "attractive_potential");
    detail::require_lambda(lambda);
    return 0.5 * lambda * q_rv.norm2();
}

/// Velocity command p_v + lambda * q_rv: feed-forward of the target
/// velocity plus the attractive-field gradient term.
inline Velocity2D desired_velocity(const Velocity2D& p_v, const Vec2& q_rv, double lambda) {
    if (!p_v.finite()) throw invalid_input_error("desired_velocity: non-finite target velocity");
    detail::require_finite(q_rv, "desired_velocity");
    detail::require_lambda(lambda);
    return {p_v.vx + lambda * q_rv.x, p_v.vy + lambda * q_rv.y};
}

inline RelativeState relative_state(const Pose2D& robot, const Pose2D& target) {
    if (!robot.finite() || !target.finite())
        throw invalid_input_error("relative_state: non-finite pose");
    Vec2 q{target.x - robot.x, target.y - robot.y};
    double phi = (q.norm2() > 0.0) ? std::atan2(q.y, q.x) : target.heading;
    return {q, phi};
}

/// Speed/heading form of the tracking law for straight scans.
///
/// The speed uses |cos| so that the commanded speed always dominates the
/// target speed; that same construction bounds the arcsine argument when
/// the commanded speed (not the instantaneous robot speed) is used as
/// the denominator, so the heading is well defined for every input.
inline LinearNavCommand linear_nav_command(const Pose2D& robot, const Pose2D& target,
                                           double target_speed, double lambda) {
    if (!std::isfinite(target_speed) || target_speed < 0.0)
        throw invalid_input_error("linear_nav_command: bad target speed");
    detail::require_lambda(lambda);
    RelativeState rel = relative_state(robot, target);
    const double dist = rel.q_rv.norm();
    // Below a nanometre of separation the bearing is numerically
    // meaningless; treat the robots as coincident so the command follows
    // the target instead of chattering between pursuit directions.
    if (dist <= 1e-9) rel.phi = target.heading;
    const double dtheta = target.heading - rel.phi;
    const double speed =
        std::sqrt(target_speed * target_speed +
                  2.0 * lambda * dist * target_speed * std::abs(std::cos(dtheta)) +
                  lambda * lambda * dist * dist);
    double heading = rel.phi;
    if (speed > 0.0) {
        // |sin_ratio| <= 1 holds analytically; clamp only mops up rounding.
        const double sin_ratio = std::clamp(target_speed * std::sin(dtheta) / speed, -1.0, 1.0);
        heading = rel.phi + std::asin(sin_ratio);
    }
    return {speed, wrap_angle(heading)};
}

}  // namespace deckscan::nav

#pragma once

#include <cmath>

#include "deckscan/errors.hpp"
#include "deckscan/geometry.hpp"

namespace deckscan::nav {

/// PD gains for the omni (lane-change) maneuver. The derivative gains
/// carry a fixed positive offset above the proportional ones.
struct PDGains {
    double kp_x = 0.0;
    double kd_x = 0.0;
    double kp_y = 0.0;
    double kd_y = 0.0;
};

inline PDGains make_pd_gains(double kp_x, double kp_y, double k_offset) {
    if (!(k_offset > 0.0) || !(k_offset < 1.0))
        throw invalid_input_error("make_pd_gains: k_offset must lie in (0, 1)");
    if (!(kp_x >= 0.0) || !(kp_y >= 0.0) || !std::isfinite(kp_x) || !std::isfinite(kp_y))
        throw invalid_input_error("make_pd_gains: proportional gains must be nonnegative");
    return {kp_x, kp_x + k_offset, kp_y, kp_y + k_offset};
}

/// Position error toward a safe point, expressed in a frame rotated by
/// the fixed activation angle Phi. Rotation preserves the error norm.
inline Vec2 omni_error(const Pose2D& robot, const Vec2& safe_point, double phi_frame) {
    if (!robot.finite() || !safe_point.finite() || !std::isfinite(phi_frame))
        throw invalid_input_error("omni_error: non-finite input");
    const double dx = safe_point.x - robot.x;
    const double dy = safe_point.y - robot.y;
    const double c = std::cos(phi_frame);
    const double s = std::sin(phi_frame);
    return {c * dx + s * dy, -s * dx + c * dy};
}

/// Discrete PD speed command: V = Kp*e(t) + Kd*(e(t) - e(t-1)) per axis.
inline Vec2 pd_speed_command(const Vec2& e_now, const Vec2& e_prev, const PDGains& g) {
    return {g.kp_x * e_now.x + g.kd_x * (e_now.x - e_prev.x),
            g.kp_y * e_now.y + g.kd_y * (e_now.y - e_prev.y)};
}

/// Gains scaled from the desired axis speeds and the initial displacement
/// to the safe point. Either displacement component being zero makes the
/// quotient ill-posed; callers that cannot rule that out should use
/// select_pd_gains_floored.
inline PDGains select_pd_gains(const Vec2& v_desired, const Pose2D& start, const Vec2& safe_point,
                               double k_offset) {
    if (!v_desired.finite() || !start.finite() || !safe_point.finite())
        throw invalid_input_error("select_pd_gains: non-finite input");
    const double dx = std::abs(safe_point.x - start.x);
    const double dy = std::abs(safe_point.y - start.y);
    if (dx == 0.0 || dy == 0.0)
        throw degenerate_geometry_error("select_pd_gains: zero displacement along an axis");
    return make_pd_gains(std::abs(v_desired.x) / dx, std::abs(v_desired.y) / dy, k_offset);
}

/// Variant used by the mission simulator: desired axis speeds are taken
/// proportional to the displacement direction, and each axis displacement
/// is floored so a lane change that is purely lateral (or purely
/// longitudinal) still yields finite, benign gains.
inline PDGains select_pd_gains_floored(double desired_speed, const Pose2D& start,
                                       const Vec2& safe_point, double k_offset,
                                       double min_displacement) {
    if (!(min_displacement > 0.0))
        throw invalid_input_error("select_pd_gains_floored: min_displacement must be positive");
    const double dx = std::abs(safe_point.x - start.x);
    const double dy = std::abs(safe_point.y - start.y);
    const double dist = std::max(std::hypot(dx, dy), min_displacement);
    const double vx = desired_speed * dx / dist;
    const double vy = desired_speed * dy / dist;
    return make_pd_gains(vx / std::max(dx, min_displacement), vy / std::max(dy, min_displacement),
                         k_offset);
}

}  // namespace deckscan::nav

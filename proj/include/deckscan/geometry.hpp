#pragma once

#include <cmath>

namespace deckscan {

inline constexpr double kPi = 3.14159265358979323846;

/// Wrap an angle to (-pi, pi].
inline double wrap_angle(double a) {
    a = std::fmod(a + kPi, 2.0 * kPi);
    if (a <= 0.0) a += 2.0 * kPi;
    return a - kPi;
}

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2& operator+=(const Vec2& o) { x += o.x; y += o.y; return *this; }

    double dot(const Vec2& o) const { return x * o.x + y * o.y; }
    double norm2() const { return x * x + y * y; }
    double norm() const { return std::sqrt(norm2()); }
    bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }

inline double distance(const Vec2& a, const Vec2& b) { return (a - b).norm(); }

/// Planar pose. Heading is kept normalized to (-pi, pi].
struct Pose2D {
    double x = 0.0;
    double y = 0.0;
    double heading = 0.0;

    Pose2D() = default;
    Pose2D(double x_, double y_, double heading_) : x(x_), y(y_), heading(wrap_angle(heading_)) {}

    Vec2 position() const { return {x, y}; }
    bool finite() const {
        return std::isfinite(x) && std::isfinite(y) && std::isfinite(heading);
    }
};

/// Planar velocity in world coordinates.
struct Velocity2D {
    double vx = 0.0;
    double vy = 0.0;

    double speed() const { return std::sqrt(vx * vx + vy * vy); }
    Vec2 vec() const { return {vx, vy}; }
    bool finite() const { return std::isfinite(vx) && std::isfinite(vy); }
};

}  // namespace deckscan

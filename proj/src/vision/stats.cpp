#include "deckscan/vision/stats.hpp"

#include <algorithm>
#include <cmath>

namespace deckscan::vision {

namespace {

double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b) {
    const Vec2 ab = b - a;
    const double len2 = ab.norm2();
    if (len2 == 0.0) return (p - a).norm();
    const double t = std::clamp((p - a).dot(ab) / len2, 0.0, 1.0);
    return (p - (a + ab * t)).norm();
}

void dp_mark(const std::vector<Vec2>& pts, std::size_t lo, std::size_t hi, double tol,
             std::vector<char>& keep) {
    if (hi <= lo + 1) return;
    double worst = -1.0;
    std::size_t arg = lo;
    for (std::size_t i = lo + 1; i < hi; ++i) {
        const double d = point_segment_distance(pts[i], pts[lo], pts[hi]);
        if (d > worst) {
            worst = d;
            arg = i;
        }
    }
    if (worst > tol) {
        keep[arg] = 1;
        dp_mark(pts, lo, arg, tol, keep);
        dp_mark(pts, arg, hi, tol, keep);
    }
}

}  // namespace

std::vector<Vec2> simplify_polyline(const std::vector<Vec2>& points, double tolerance) {
    if (points.size() <= 2) return points;
    std::vector<char> keep(points.size(), 0);
    keep.front() = keep.back() = 1;
    dp_mark(points, 0, points.size() - 1, tolerance, keep);
    std::vector<Vec2> out;
    for (std::size_t i = 0; i < points.size(); ++i)
        if (keep[i]) out.push_back(points[i]);
    return out;
}

double polyline_length(const std::vector<Vec2>& points) {
    double len = 0.0;
    for (std::size_t i = 1; i < points.size(); ++i) len += (points[i] - points[i - 1]).norm();
    return len;
}

std::vector<Vec2> path_polyline(const CrackPath& path, double tolerance_px) {
    std::vector<Vec2> pts;
    pts.reserve(path.pixels.size());
    for (const auto& p : path.pixels)
        pts.push_back({static_cast<double>(p.x), static_cast<double>(p.y)});
    return simplify_polyline(pts, tolerance_px);
}

WidthProfile estimate_width(const CrackPath& path, const Mask& mask, double scale_m_per_px,
                            int sample_step_px) {
    if (path.pixels.empty() || sample_step_px < 1)
        throw invalid_input_error("estimate_width: empty path or bad step");

    const auto& chain = path.pixels;
    const int n = static_cast<int>(chain.size());

    auto run_length = [&](const PixelCoord& start, double nx, double ny) {
        int count = 0;
        PixelCoord prev = start;
        for (double tau = 0.5; tau <= 200.0; tau += 0.5) {
            const PixelCoord p{static_cast<int>(std::lround(start.x + tau * nx)),
                               static_cast<int>(std::lround(start.y + tau * ny))};
            if (p == prev) continue;
            if (!mask.in_bounds(p.x, p.y) || !mask.at(p.x, p.y)) break;
            // Runs advance pixel by pixel; a jump past a gap must not count.
            ++count;
            prev = p;
        }
        return count;
    };

    WidthProfile prof;
    prof.min_m = std::numeric_limits<double>::infinity();
    double sum = 0.0;
    int samples = 0;
    for (int i = 0; i < n; i += sample_step_px) {
        const int a = std::max(0, i - 2);
        const int b = std::min(n - 1, i + 2);
        double tx = chain[b].x - chain[a].x;
        double ty = chain[b].y - chain[a].y;
        const double tn = std::hypot(tx, ty);
        if (tn == 0.0) {
            tx = 1.0;
            ty = 0.0;
        } else {
            tx /= tn;
            ty /= tn;
        }
        const double nx = -ty, ny = tx;
        const int w_px = run_length(chain[i], nx, ny) + run_length(chain[i], -nx, -ny) + 1;
        const double w = w_px * scale_m_per_px;
        sum += w;
        ++samples;
        if (w > prof.max_m) {
            prof.max_m = w;
            prof.max_loc_px = {static_cast<double>(chain[i].x), static_cast<double>(chain[i].y)};
        }
        if (w < prof.min_m) {
            prof.min_m = w;
            prof.min_loc_px = {static_cast<double>(chain[i].x), static_cast<double>(chain[i].y)};
        }
    }
    prof.mean_m = samples ? sum / samples : 0.0;
    if (!samples) prof.min_m = 0.0;
    return prof;
}

void measure_paths(std::vector<CrackPath>& paths, const Mask& mask, double scale_m_per_px,
                   double simplify_tolerance_px, int width_sample_step_px) {
    for (auto& p : paths) {
        p.length_m = polyline_length(path_polyline(p, simplify_tolerance_px)) * scale_m_per_px;
        p.width = estimate_width(p, mask, scale_m_per_px, width_sample_step_px);
    }
}

CrackStatistics crack_statistics(const std::vector<CrackPath>& paths, double scale_m_per_px) {
    if (!(scale_m_per_px > 0.0))
        throw invalid_input_error("crack_statistics: scale must be positive");
    CrackStatistics s;
    if (paths.empty()) return s;

    s.empty = false;
    s.crack_count = static_cast<int>(paths.size());
    s.shortest_m = std::numeric_limits<double>::infinity();
    s.min_width_m = std::numeric_limits<double>::infinity();
    for (const auto& p : paths) {
        s.total_length_m += p.length_m;
        const PixelCoord mid = p.pixels[p.pixels.size() / 2];
        const Vec2 mid_m{mid.x * scale_m_per_px, mid.y * scale_m_per_px};
        if (p.length_m > s.longest_m) {
            s.longest_m = p.length_m;
            s.longest_loc_m = mid_m;
        }
        if (p.length_m < s.shortest_m) {
            s.shortest_m = p.length_m;
            s.shortest_loc_m = mid_m;
        }
        if (p.width.max_m > s.max_width_m) {
            s.max_width_m = p.width.max_m;
            s.max_width_loc_m = p.width.max_loc_px * scale_m_per_px;
        }
        if (p.width.min_m < s.min_width_m) {
            s.min_width_m = p.width.min_m;
            s.min_width_loc_m = p.width.min_loc_px * scale_m_per_px;
        }
    }
    return s;
}

}  // namespace deckscan::vision

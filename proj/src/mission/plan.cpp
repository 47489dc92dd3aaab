#include "deckscan/mission/plan.hpp"

#include <cmath>

#include "deckscan/errors.hpp"

namespace deckscan::mission {

namespace {
// Guards against counting an extra lane/station when a ratio such as
// 18ft/6ft lands a hair above an integer in floating point.
constexpr double kCountEps = 1e-9;
}  // namespace

int lane_count(const DeckSpec& deck) {
    deck.validate();
    const double ratio = deck.surveyable_width() / deck.scan_width;
    return std::max(1, static_cast<int>(std::ceil(ratio - kCountEps)));
}

std::vector<double> lane_positions(const DeckSpec& deck) {
    const int n = lane_count(deck);
    std::vector<double> ys;
    ys.reserve(n);
    if (n == 1) {
        ys.push_back(deck.width / 2.0);
        return ys;
    }
    const double first = deck.curb_offset + deck.scan_width / 2.0;
    for (int k = 0; k + 1 < n; ++k) ys.push_back(first + k * deck.scan_width);
    // Snug the final pass against the far curb so nothing past it is
    // left uncovered; the resulting overlap with its neighbor is <= one
    // scan width.
    ys.push_back(deck.width - deck.curb_offset - deck.scan_width / 2.0);
    return ys;
}

int stations_per_line(double line_length, double spacing) {
    if (!(spacing > 0.0)) throw invalid_input_error("stations_per_line: spacing must be positive");
    if (!(line_length >= 0.0)) throw invalid_input_error("stations_per_line: negative length");
    return static_cast<int>(std::floor(line_length / spacing + kCountEps)) + 1;
}

MissionPlan plan_lawnmower(const DeckSpec& deck, MissionMode mode, const MotionSettings& motion,
                           double station_spacing) {
    deck.validate();
    if (!(station_spacing > 0.0))
        throw planning_error("plan_lawnmower: station spacing must be positive");
    if (!(motion.cruise_speed > 0.0))
        throw planning_error("plan_lawnmower: cruise speed must be positive");

    MissionPlan plan;
    plan.mode = mode;
    plan.station_spacing = station_spacing;
    plan.motion = motion;

    const std::vector<double> ys = lane_positions(deck);
    for (std::size_t k = 0; k < ys.size(); ++k) {
        const Vec2 west{deck.origin.x, deck.origin.y + ys[k]};
        const Vec2 east{deck.origin.x + deck.length, deck.origin.y + ys[k]};
        if (k % 2 == 0)
            plan.scan_lines.push_back({west, east});
        else
            plan.scan_lines.push_back({east, west});
    }
    for (std::size_t k = 0; k + 1 < plan.scan_lines.size(); ++k) {
        plan.safe_waypoints.push_back(plan.scan_lines[k].stop);
        plan.safe_waypoints.push_back(plan.scan_lines[k + 1].start);
    }
    return plan;
}

std::vector<PlannedStation> planned_stations(const MissionPlan& plan) {
    std::vector<PlannedStation> out;
    int global = 0;
    for (std::size_t lane = 0; lane < plan.scan_lines.size(); ++lane) {
        const ScanLine& line = plan.scan_lines[lane];
        const int n = stations_per_line(line.length(), plan.station_spacing);
        const Vec2 dir = line.direction();
        for (int j = 0; j < n; ++j) {
            PlannedStation s;
            s.lane = static_cast<int>(lane);
            s.index_on_lane = j;
            s.global_index = global++;
            s.position = line.start + dir * (j * plan.station_spacing);
            s.heading = line.heading();
            out.push_back(s);
        }
    }
    return out;
}

}  // namespace deckscan::mission

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "deckscan/mission/plan.hpp"
#include "deckscan/mission/simulate.hpp"
#include "deckscan/mission/timeline.hpp"

using namespace deckscan;
using namespace deckscan::mission;

namespace {

// Enumeration oracle: count swaths by laying them down until the
// surveyable band is covered.
int lanes_by_enumeration(const DeckSpec& deck) {
    const double span = deck.surveyable_width();
    int n = 0;
    double covered = 0.0;
    while (covered < span - 1e-9) {
        covered += deck.scan_width;
        ++n;
    }
    return std::max(1, n);
}

// Enumeration oracle: walk stations along a line until past the end.
int stations_by_enumeration(double length, double spacing) {
    int n = 0;
    double s = 0.0;
    while (s <= length + 1e-9) {
        ++n;
        s += spacing;
    }
    return n;
}

DeckSpec paper_deck() {
    DeckSpec d;
    d.length = 200.0 * kFoot;  // 60.96 m
    d.width = 20.0 * kFoot;    // 6.096 m
    return d;
}

MotionSettings instant_motion(double cruise, double dwell = 4.5) {
    MotionSettings m;
    m.cruise_speed = cruise;
    m.accel = 0.0;
    m.dwell_s = dwell;
    return m;
}

}  // namespace

TEST_CASE("lane count for the 20 ft x 200 ft deck") {
    const DeckSpec deck = paper_deck();
    CHECK(lane_count(deck) == 3);
    CHECK(lane_count(deck) == lanes_by_enumeration(deck));

    SUBCASE("full lateral coverage by sampling") {
        const auto ys = lane_positions(deck);
        for (double y = 0.0; y <= deck.width; y += 0.05) {
            double best = 1e9;
            for (double ly : ys) best = std::min(best, std::abs(y - ly));
            CHECK(best <= deck.scan_width / 2.0 + deck.curb_offset + 1e-9);
        }
    }
}

TEST_CASE("single lane when the deck is exactly one swath wide") {
    DeckSpec deck;
    deck.width = 2.0 * deck.curb_offset + deck.scan_width;
    deck.length = 10.0;
    CHECK(lane_count(deck) == 1);
    CHECK(lane_positions(deck).size() == 1);
    CHECK(lane_positions(deck)[0] == doctest::Approx(deck.width / 2.0));
}

TEST_CASE("deck narrower than the curbs fails planning") {
    DeckSpec deck;
    deck.width = 0.5;
    deck.curb_offset = 0.3;
    CHECK_THROWS_AS(plan_lawnmower(deck, MissionMode::stop_move, MotionSettings{}),
                    planning_error);
}

TEST_CASE("stations per line") {
    CHECK(stations_per_line(61.0, 0.6096) == 101);
    CHECK(stations_per_line(200.0 * kFoot, 2.0 * kFoot) == 101);
    CHECK(stations_per_line(61.0, 0.6096) == stations_by_enumeration(61.0, 0.6096));
}

TEST_CASE("lane and station counts match the enumeration oracles on random decks") {
    std::mt19937_64 rng(20240517);
    std::uniform_real_distribution<double> ulen(1.0, 120.0);
    std::uniform_real_distribution<double> uwid(1.0, 30.0);
    std::uniform_real_distribution<double> usw(0.4, 4.0);
    std::uniform_real_distribution<double> ucurb(0.0, 0.45);
    std::uniform_real_distribution<double> usp(0.2, 2.0);
    for (int i = 0; i < 500; ++i) {
        DeckSpec deck;
        deck.length = ulen(rng);
        deck.width = uwid(rng);
        deck.scan_width = usw(rng);
        deck.curb_offset = ucurb(rng) * deck.width;  // keeps 2*curb < width
        const double spacing = usp(rng);
        CHECK(lane_count(deck) == lanes_by_enumeration(deck));
        CHECK(stations_per_line(deck.length, spacing) ==
              stations_by_enumeration(deck.length, spacing));

        const auto plan = plan_lawnmower(deck, MissionMode::stop_move, MotionSettings{}, spacing);
        CHECK(static_cast<int>(plan.scan_lines.size()) == lane_count(deck));
        // Lines inside the curb band, consecutive separation bounded by the swath.
        for (std::size_t k = 0; k < plan.scan_lines.size(); ++k) {
            const double y = plan.scan_lines[k].start.y;
            CHECK(y >= deck.curb_offset - 1e-9);
            CHECK(y <= deck.width - deck.curb_offset + 1e-9);
            if (k > 0)
                CHECK(std::abs(y - plan.scan_lines[k - 1].start.y) <= deck.scan_width + 1e-9);
        }
        const auto st = planned_stations(plan);
        CHECK(static_cast<int>(st.size()) ==
              lane_count(deck) * stations_per_line(deck.length, spacing));
    }
}

TEST_CASE("planned stations are evenly spaced and monotone along each lane") {
    const auto plan = plan_lawnmower(paper_deck(), MissionMode::stop_move, MotionSettings{});
    const auto st = planned_stations(plan);
    for (std::size_t i = 1; i < st.size(); ++i) {
        if (st[i].lane != st[i - 1].lane) continue;
        const double step = distance(st[i].position, st[i - 1].position);
        CHECK(step == doctest::Approx(plan.station_spacing).epsilon(1e-9));
    }
}

TEST_CASE("virtual trajectory basics") {
    DeckSpec deck = paper_deck();
    deck.length = 61.0;

    SUBCASE("initial state sits at the first line start with the line heading") {
        const auto plan = plan_lawnmower(deck, MissionMode::non_stop, instant_motion(0.5));
        const VirtualState s = virtual_trajectory(plan, 0.0);
        CHECK(s.position.x == doctest::Approx(plan.scan_lines[0].start.x));
        CHECK(s.position.y == doctest::Approx(plan.scan_lines[0].start.y));
        CHECK(s.heading == doctest::Approx(plan.scan_lines[0].heading()));
    }

    SUBCASE("non-stop 61 m line at 0.5 m/s ends at t = 122 s") {
        DeckSpec narrow = deck;
        narrow.width = 2.0 * narrow.curb_offset + narrow.scan_width;  // one lane
        const auto plan = plan_lawnmower(narrow, MissionMode::non_stop, instant_motion(0.5));
        const MissionTimeline tl(plan);
        CHECK(tl.duration() == doctest::Approx(122.0));
        const VirtualState before = tl.state_at(121.0);
        CHECK(before.velocity.speed() == doctest::Approx(0.5));
        const VirtualState after = tl.state_at(200.0);  // clamps to the final pose at rest
        CHECK(after.velocity.speed() == 0.0);
        CHECK(after.position.x == doctest::Approx(plan.scan_lines[0].stop.x));
    }

    SUBCASE("stop-move arrival times match the event-list oracle") {
        DeckSpec narrow = deck;
        narrow.width = 2.0 * narrow.curb_offset + narrow.scan_width;
        const double dwell = 4.0;
        const auto plan =
            plan_lawnmower(narrow, MissionMode::stop_move, instant_motion(0.5, dwell));
        const MissionTimeline tl(plan);

        // Oracle: enumerate alternating dwell/hop events.
        std::vector<double> arrival;
        double t = 0.0;
        const int n = stations_per_line(narrow.length, plan.station_spacing);
        for (int k = 0; k < n; ++k) {
            arrival.push_back(t);
            t += dwell + plan.station_spacing / 0.5;
        }
        for (int k : {0, 1, 5, 50, 100}) {
            CHECK(arrival[k] == doctest::Approx(k * (plan.station_spacing / 0.5 + dwell)));
            const VirtualState s = tl.state_at(arrival[k] + dwell / 2.0);
            CHECK(s.velocity.speed() == 0.0);
            const double along = (s.position - plan.scan_lines[0].start).norm();
            CHECK(along == doctest::Approx(k * plan.station_spacing).epsilon(1e-9));
        }
    }

    SUBCASE("negative time rejected") {
        const auto plan = plan_lawnmower(deck, MissionMode::non_stop, instant_motion(0.5));
        CHECK_THROWS_AS(virtual_trajectory(plan, -1.0), invalid_input_error);
    }
}

TEST_CASE("move profile with an acceleration limit is consistent") {
    const MoveProfile p{0.6096, 0.5, 0.25};
    // 0.5^2/0.25 = 1.0 m of ramp needed > 0.6096: triangular profile.
    CHECK(p.duration() == doctest::Approx(2.0 * std::sqrt(0.6096 / 0.25)));
    CHECK(p.position_at(0.0) == 0.0);
    CHECK(p.position_at(p.duration()) == doctest::Approx(0.6096));
    CHECK(p.speed_at(p.duration() / 2.0) == doctest::Approx(std::sqrt(0.25 * 0.6096)));

    const MoveProfile long_move{10.0, 0.5, 0.25};
    CHECK(long_move.duration() == doctest::Approx(10.0 / 0.5 + 0.5 / 0.25));
    CHECK(long_move.position_at(long_move.duration() / 2.0) == doctest::Approx(5.0));
    CHECK(long_move.speed_at(long_move.duration() / 2.0) == doctest::Approx(0.5));
}

TEST_CASE("simulation holds equilibrium when started matched") {
    DeckSpec deck;
    deck.width = 2.0 * deck.curb_offset + deck.scan_width;
    deck.length = 61.0;
    const auto plan = plan_lawnmower(deck, MissionMode::non_stop, instant_motion(0.5));

    SimulationSettings settings;
    settings.initial_pose = Pose2D{plan.scan_lines[0].start.x, plan.scan_lines[0].start.y,
                                   plan.scan_lines[0].heading()};
    const auto result =
        simulate_mission(plan, nav::ControllerParams{}, GainsPolicy{}, NoiseModel{}, settings);
    const MissionTimeline tl(plan);
    for (const auto& row : result.log) {
        if (row.t > 100.0) break;
        const VirtualState v = tl.state_at(row.t);
        CHECK(distance(row.true_pose.position(), v.position) <= 1e-6);
    }
}

TEST_CASE("steady-state cross-track error under 1 cm on a straight scan") {
    DeckSpec deck;
    deck.width = 2.0 * deck.curb_offset + deck.scan_width;
    deck.length = 61.0;
    const auto plan = plan_lawnmower(deck, MissionMode::non_stop, instant_motion(0.5));
    const double lane_y = plan.scan_lines[0].start.y;

    SimulationSettings settings;
    settings.initial_pose = Pose2D{0.0, lane_y + 0.5, 0.0};  // half a metre off the line
    const auto result =
        simulate_mission(plan, nav::ControllerParams{}, GainsPolicy{}, NoiseModel{}, settings);
    double worst_late = 0.0;
    for (const auto& row : result.log)
        if (row.t > 90.0 && row.t < 120.0)
            worst_late = std::max(worst_late, std::abs(row.true_pose.y - lane_y));
    CHECK(worst_late < 0.01);
}

TEST_CASE("relative distance to the moving target decays exponentially (R^2 fit)") {
    DeckSpec deck;
    deck.width = 2.0 * deck.curb_offset + deck.scan_width;
    deck.length = 61.0;
    const auto plan = plan_lawnmower(deck, MissionMode::non_stop, instant_motion(0.5));
    const double lambda = 0.05;

    SimulationSettings settings;
    settings.initial_pose = Pose2D{plan.scan_lines[0].start.x - 1.0,
                                   plan.scan_lines[0].start.y + 1.0, 0.0};
    const auto result = simulate_mission(plan, nav::ControllerParams{lambda}, GainsPolicy{},
                                         NoiseModel{}, settings);
    const MissionTimeline tl(plan);

    // Least-squares fit of log |q_rv| against t over [0, 3/lambda].
    std::vector<double> ts, logq;
    for (const auto& row : result.log) {
        if (row.t > 3.0 / lambda) break;
        const double d = distance(row.true_pose.position(), tl.state_at(row.t).position);
        if (d <= 0.0) continue;
        ts.push_back(row.t);
        logq.push_back(std::log(d));
    }
    const double n = static_cast<double>(ts.size());
    double st = 0, sq = 0, stt = 0, stq = 0, sqq = 0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        st += ts[i];
        sq += logq[i];
        stt += ts[i] * ts[i];
        stq += ts[i] * logq[i];
        sqq += logq[i] * logq[i];
    }
    const double slope = (n * stq - st * sq) / (n * stt - st * st);
    const double r_num = (n * stq - st * sq);
    const double r2 = r_num * r_num / ((n * stt - st * st) * (n * sqq - sq * sq));
    CHECK(r2 > 0.999);
    CHECK(slope == doctest::Approx(-lambda).epsilon(0.02));
}

TEST_CASE("stop-move mission with noise captures every station") {
    DeckSpec deck;
    deck.width = 20.0 * kFoot;
    deck.length = 20.0 * kFoot;  // short deck: 3 lanes x 11 stations
    MotionSettings motion;
    motion.dwell_s = 2.0;
    motion.turn_duration_s = 18.0;
    const auto plan = plan_lawnmower(deck, MissionMode::stop_move, motion);
    NoiseModel noise;
    noise.pose_sigma = 0.02;
    noise.heading_sigma = 0.01;
    noise.seed = 7;
    const auto result =
        simulate_mission(plan, nav::ControllerParams{}, GainsPolicy{}, noise, {});
    const auto planned = planned_stations(plan);
    CHECK(result.stations.size() == planned.size());
    for (std::size_t i = 0; i < result.stations.size(); ++i) {
        CHECK(result.stations[i].index == static_cast<int>(i));
        CHECK(distance(result.stations[i].pose.position(), planned[i].position) < 0.12);
    }
    // Timestamps strictly increase.
    for (std::size_t i = 1; i < result.stations.size(); ++i)
        CHECK(result.stations[i].timestamp > result.stations[i - 1].timestamp);
}

TEST_CASE("identical seeds reproduce identical logs") {
    DeckSpec deck;
    deck.width = 20.0 * kFoot;
    deck.length = 6.0;
    MotionSettings motion;
    motion.dwell_s = 1.0;
    motion.turn_duration_s = 15.0;
    const auto plan = plan_lawnmower(deck, MissionMode::stop_move, motion);
    NoiseModel noise;
    noise.pose_sigma = 0.02;
    noise.heading_sigma = 0.01;
    noise.seed = 99;
    const auto a = simulate_mission(plan, nav::ControllerParams{}, GainsPolicy{}, noise, {});
    const auto b = simulate_mission(plan, nav::ControllerParams{}, GainsPolicy{}, noise, {});
    REQUIRE(a.log.size() == b.log.size());
    for (std::size_t i = 0; i < a.log.size(); ++i) {
        CHECK(a.log[i].true_pose.x == b.log[i].true_pose.x);
        CHECK(a.log[i].true_pose.y == b.log[i].true_pose.y);
        CHECK(a.log[i].est_pose.x == b.log[i].est_pose.x);
        CHECK(a.log[i].cmd_speed == b.log[i].cmd_speed);
    }
    REQUIRE(a.stations.size() == b.stations.size());
}

TEST_CASE("heading is held through lane changes") {
    DeckSpec deck;
    deck.width = 20.0 * kFoot;
    deck.length = 6.0;
    MotionSettings motion;
    motion.dwell_s = 1.0;
    motion.turn_duration_s = 18.0;
    const auto plan = plan_lawnmower(deck, MissionMode::stop_move, motion);
    NoiseModel noise;
    noise.pose_sigma = 0.01;
    noise.seed = 3;
    const auto result = simulate_mission(plan, nav::ControllerParams{}, GainsPolicy{}, noise, {});
    const MissionTimeline tl(plan);
    for (const auto& seg : tl.segments()) {
        if (seg.kind != MissionTimeline::Segment::Kind::turn) continue;
        double h0 = 0.0;
        bool first = true;
        for (const auto& row : result.log) {
            if (row.t < seg.t0 + 1e-9 || row.t >= seg.t1) continue;
            if (first) {
                h0 = row.true_pose.heading;
                first = false;
            }
            CHECK(std::abs(wrap_angle(row.true_pose.heading - h0)) < 1.0 * kPi / 180.0);
        }
    }
}

TEST_CASE("full coverage of the surveyable area") {
    DeckSpec deck;
    deck.width = 20.0 * kFoot;
    deck.length = 12.0;
    const auto plan = plan_lawnmower(deck, MissionMode::non_stop, instant_motion(1.0));
    const auto result =
        simulate_mission(plan, nav::ControllerParams{}, GainsPolicy{}, NoiseModel{}, {});

    std::vector<Vec2> path;
    for (std::size_t i = 0; i < result.log.size(); i += 5)
        path.push_back(result.log[i].true_pose.position());
    path.push_back(result.log.back().true_pose.position());

    for (double x = 0.05; x < deck.length; x += 0.1) {
        for (double y = deck.curb_offset + 0.05; y < deck.width - deck.curb_offset; y += 0.1) {
            double best = 1e18;
            for (const auto& p : path) best = std::min(best, (p - Vec2{x, y}).norm2());
            CHECK(std::sqrt(best) <= deck.scan_width / 2.0 + 0.05);
        }
    }
}

TEST_CASE("unstable fixed omni gains raise the divergence error") {
    DeckSpec deck;
    deck.width = 20.0 * kFoot;
    deck.length = 6.0;
    MotionSettings motion;
    motion.dwell_s = 0.5;
    motion.turn_duration_s = 60.0;
    const auto plan = plan_lawnmower(deck, MissionMode::stop_move, motion);
    GainsPolicy gains;
    gains.kind = GainsPolicy::Kind::fixed;
    gains.fixed_gains = nav::PDGains{202.0, 202.1, 202.0, 202.1};  // kp*dt > 2: unstable
    CHECK_THROWS_AS(
        simulate_mission(plan, nav::ControllerParams{}, gains, NoiseModel{}, {}),
        simulation_diverged_error);
}

TEST_CASE("bad dt rejected") {
    const auto plan = plan_lawnmower(paper_deck(), MissionMode::non_stop, instant_motion(0.5));
    SimulationSettings s;
    s.dt = 0.0;
    CHECK_THROWS_AS(simulate_mission(plan, nav::ControllerParams{}, GainsPolicy{}, NoiseModel{}, s),
                    invalid_input_error);
    s.dt = 0.2;
    CHECK_THROWS_AS(simulate_mission(plan, nav::ControllerParams{}, GainsPolicy{}, NoiseModel{}, s),
                    invalid_input_error);
}

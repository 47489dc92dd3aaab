#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "deckscan/nav/omni.hpp"
#include "deckscan/nav/tracking.hpp"

using namespace deckscan;
using namespace deckscan::nav;

namespace {

// Independent re-evaluation oracles, kept deliberately dumb.
double potential_oracle(double x, double y, double lambda) {
    return 0.5 * lambda * (x * x + y * y);
}

std::mt19937_64 rng_for(const char* tag) {
    std::seed_seq seq(tag, tag + std::char_traits<char>::length(tag));
    return std::mt19937_64(seq);
}

}  // namespace

TEST_CASE("attractive potential matches the quadratic form") {
    CHECK(attractive_potential({0.0, 0.0}, 0.05) == 0.0);
    CHECK(attractive_potential({2.0, 0.0}, 0.05) == doctest::Approx(0.1));

    auto rng = rng_for("potential");
    std::uniform_real_distribution<double> u(-50.0, 50.0);
    for (int i = 0; i < 2000; ++i) {
        const double x = u(rng), y = u(rng);
        const double lambda = std::abs(u(rng)) + 1e-3;
        const double got = attractive_potential({x, y}, lambda);
        CHECK(got == doctest::Approx(potential_oracle(x, y, lambda)).epsilon(1e-12));
        CHECK(got >= 0.0);
    }
}

TEST_CASE("attractive potential is zero only at coincidence") {
    CHECK(attractive_potential({1e-9, 0.0}, 0.05) > 0.0);
    CHECK(attractive_potential({0.0, -1e-9}, 0.05) > 0.0);
}

TEST_CASE("attractive potential rejects bad input") {
    CHECK_THROWS_AS(attractive_potential({std::nan(""), 0.0}, 0.05), invalid_input_error);
    CHECK_THROWS_AS(attractive_potential({0.0, 0.0}, 0.0), invalid_input_error);
    CHECK_THROWS_AS(attractive_potential({0.0, 0.0}, -0.1), invalid_input_error);
}

TEST_CASE("desired velocity equals target velocity plus field term") {
    SUBCASE("tracking achieved: command equals target velocity") {
        const Velocity2D v = desired_velocity({1.0, 0.0}, {0.0, 0.0}, 0.05);
        CHECK(v.vx == 1.0);
        CHECK(v.vy == 0.0);
    }
    SUBCASE("stationary target reduces to the pure field term") {
        const Velocity2D v = desired_velocity({0.0, 0.0}, {2.0, 0.0}, 0.05);
        CHECK(v.vx == doctest::Approx(0.1));
        CHECK(v.vy == 0.0);
    }
    SUBCASE("componentwise oracle on random inputs") {
        auto rng = rng_for("desired-velocity");
        std::uniform_real_distribution<double> u(-10.0, 10.0);
        for (int i = 0; i < 2000; ++i) {
            const Velocity2D pv{u(rng), u(rng)};
            const Vec2 q{u(rng), u(rng)};
            const double lambda = std::abs(u(rng)) + 1e-3;
            const Velocity2D got = desired_velocity(pv, q, lambda);
            CHECK(got.vx == doctest::Approx(pv.vx + lambda * q.x).epsilon(1e-12));
            CHECK(got.vy == doctest::Approx(pv.vy + lambda * q.y).epsilon(1e-12));
        }
    }
    SUBCASE("rejects non-finite input") {
        CHECK_THROWS_AS(desired_velocity({std::nan(""), 0.0}, {0.0, 0.0}, 0.05),
                        invalid_input_error);
    }
}

TEST_CASE("linear nav command: coincident robots follow the target") {
    const Pose2D robot{3.0, 4.0, 0.0};
    const Pose2D target{3.0, 4.0, 0.3};
    const LinearNavCommand cmd = linear_nav_command(robot, target, 0.5, 0.05);
    CHECK(cmd.speed == doctest::Approx(0.5));
    CHECK(cmd.heading == doctest::Approx(0.3));
}

TEST_CASE("linear nav command: stationary target reduction") {
    const Pose2D robot{0.0, 0.0, 0.0};
    const Pose2D target{10.0, 0.0, 0.0};
    const LinearNavCommand cmd = linear_nav_command(robot, target, 0.0, 0.05);
    CHECK(cmd.speed == doctest::Approx(0.5));
    CHECK(cmd.heading == doctest::Approx(0.0));
}

TEST_CASE("linear nav command: perpendicular-offset case against direct evaluation") {
    // target 2 m due east, moving at 0.3 m/s at right angle to the bearing.
    const Pose2D robot{0.0, 0.0, 0.0};
    const Pose2D target{2.0, 0.0, kPi / 2.0};
    const LinearNavCommand cmd = linear_nav_command(robot, target, 0.3, 0.05);
    // v = sqrt(0.3^2 + 0 + (0.05*2)^2), heading = phi + asin(0.3 / v)
    CHECK(cmd.speed == doctest::Approx(0.31622776601683794).epsilon(1e-12));
    CHECK(cmd.heading == doctest::Approx(1.2490457723982544).epsilon(1e-9));
}

TEST_CASE("linear nav command: asin argument bounded and speed dominates target speed") {
    auto rng = rng_for("nav-law-domain");
    std::uniform_real_distribution<double> upos(-100.0, 100.0);
    std::uniform_real_distribution<double> uang(-kPi, kPi);
    std::uniform_real_distribution<double> uspeed(0.0, 5.0);
    std::uniform_real_distribution<double> ulambda(1e-4, 2.0);
    for (int i = 0; i < 20000; ++i) {
        const Pose2D robot{upos(rng), upos(rng), uang(rng)};
        const Pose2D target{upos(rng), upos(rng), uang(rng)};
        const double speed = uspeed(rng);
        const double lambda = ulambda(rng);
        const LinearNavCommand cmd = linear_nav_command(robot, target, speed, lambda);
        CHECK(cmd.speed >= speed - 1e-12);
        if (cmd.speed > 0.0) {
            const RelativeState rel = relative_state(robot, target);
            const double arg = speed * std::sin(target.heading - rel.phi) / cmd.speed;
            CHECK(std::abs(arg) <= 1.0 + 1e-12);
        }
        CHECK(std::isfinite(cmd.heading));
        CHECK(cmd.heading <= kPi);
        CHECK(cmd.heading > -kPi);
    }
}

TEST_CASE("closed-loop relative distance decays exponentially") {
    // Integrate the tracking loop with a stationary target and compare
    // against the closed forms |q(t)| = |q(0)| e^{-lambda t} and
    // V_a(t) = V_a(0) e^{-2 lambda t}.
    const double lambda = 0.05;
    const double dt = 1e-3 * (1.0 / lambda) * 0.05;  // well under the 1e-3/lambda bound
    Vec2 robot{3.0, 4.0};
    const Vec2 target{0.0, 0.0};
    const double q0 = (target - robot).norm();
    const double va0 = attractive_potential(target - robot, lambda);
    double t = 0.0;
    double next_check = 5.0;
    while (t < 60.0 + dt) {
        if (t >= next_check) {
            const double expected = q0 * std::exp(-lambda * t);
            CHECK((target - robot).norm() == doctest::Approx(expected).epsilon(1e-3));
            const double va = attractive_potential(target - robot, lambda);
            CHECK(va == doctest::Approx(va0 * std::exp(-2.0 * lambda * t)).epsilon(2e-3));
            next_check += 5.0;
        }
        const Velocity2D v = desired_velocity({0.0, 0.0}, target - robot, lambda);
        robot += Vec2{v.vx, v.vy} * dt;
        t += dt;
    }
}

TEST_CASE("omni error rotates the displacement into the maneuver frame") {
    SUBCASE("zero at the safe point") {
        const Vec2 e = omni_error({2.0, 3.0, 0.7}, {2.0, 3.0}, 1.1);
        CHECK(e.x == 0.0);
        CHECK(e.y == 0.0);
    }
    SUBCASE("identity rotation") {
        const Vec2 e = omni_error({0.0, 0.0, 0.0}, {3.0, 4.0}, 0.0);
        CHECK(e.x == doctest::Approx(3.0));
        CHECK(e.y == doctest::Approx(4.0));
    }
    SUBCASE("quarter turn") {
        const Vec2 e = omni_error({0.0, 0.0, 0.0}, {3.0, 4.0}, kPi / 2.0);
        CHECK(e.x == doctest::Approx(4.0));
        CHECK(e.y == doctest::Approx(-3.0));
    }
    SUBCASE("rotation preserves the norm") {
        auto rng = rng_for("omni-norm");
        std::uniform_real_distribution<double> u(-20.0, 20.0);
        for (int i = 0; i < 2000; ++i) {
            const Pose2D robot{u(rng), u(rng), 0.0};
            const Vec2 safe{u(rng), u(rng)};
            const double phi = u(rng);
            const Vec2 e = omni_error(robot, safe, phi);
            const double direct = std::hypot(safe.x - robot.x, safe.y - robot.y);
            CHECK(e.norm() == doctest::Approx(direct).epsilon(1e-12));
        }
    }
}

TEST_CASE("pd speed command") {
    const PDGains g = make_pd_gains(0.5, 0.5, 0.1);
    SUBCASE("at rest on target") {
        const Vec2 v = pd_speed_command({0.0, 0.0}, {0.0, 0.0}, g);
        CHECK(v.x == 0.0);
        CHECK(v.y == 0.0);
    }
    SUBCASE("direct substitution") {
        const PDGains g2{0.5, 0.6, 0.5, 0.6};
        const Vec2 v = pd_speed_command({2.0, 0.0}, {1.0, 0.0}, g2);
        CHECK(v.x == doctest::Approx(1.6));
    }
    SUBCASE("constant error leaves only the proportional term") {
        const Vec2 v = pd_speed_command({1.0, 1.0}, {1.0, 1.0}, g);
        CHECK(v.x == doctest::Approx(g.kp_x));
        CHECK(v.y == doctest::Approx(g.kp_y));
    }
}

TEST_CASE("pd gain selection from displacement") {
    SUBCASE("direct substitution x") {
        const PDGains g = select_pd_gains({0.5, 0.3}, {0.0, 0.0, 0.0}, {5.0, 3.0}, 0.1);
        CHECK(g.kp_x == doctest::Approx(0.1));
        CHECK(g.kd_x == doctest::Approx(0.2));
        CHECK(g.kp_y == doctest::Approx(0.1));
        CHECK(g.kd_y == doctest::Approx(0.2));
    }
    SUBCASE("zero displacement is degenerate") {
        CHECK_THROWS_AS(select_pd_gains({0.5, 0.3}, {0.0, 1.0, 0.0}, {5.0, 1.0}, 0.1),
                        degenerate_geometry_error);
        CHECK_THROWS_AS(select_pd_gains({0.5, 0.3}, {2.0, 0.0, 0.0}, {2.0, 4.0}, 0.1),
                        degenerate_geometry_error);
    }
    SUBCASE("floored variant tolerates axis-aligned moves") {
        const PDGains g = select_pd_gains_floored(0.5, {0.0, 0.0, 0.0}, {0.0, 2.0}, 0.1, 0.01);
        CHECK(g.kp_x == doctest::Approx(0.0));
        CHECK(g.kp_y == doctest::Approx(0.5 / 2.0));
        CHECK(g.kd_y == doctest::Approx(0.5 / 2.0 + 0.1));
    }
    SUBCASE("k_offset outside (0,1) rejected") {
        CHECK_THROWS_AS(make_pd_gains(0.1, 0.1, 0.0), invalid_input_error);
        CHECK_THROWS_AS(make_pd_gains(0.1, 0.1, 1.0), invalid_input_error);
    }
}

TEST_CASE("heading normalization convention") {
    CHECK(wrap_angle(kPi) == doctest::Approx(kPi));
    CHECK(wrap_angle(-kPi) == doctest::Approx(kPi));
    CHECK(wrap_angle(3.0 * kPi / 2.0) == doctest::Approx(-kPi / 2.0));
    CHECK(wrap_angle(-3.0 * kPi / 2.0) == doctest::Approx(kPi / 2.0));
    CHECK(wrap_angle(0.0) == 0.0);
}

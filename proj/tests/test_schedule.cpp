#include <catch2/catch_amalgamated.hpp>

#include "cade/rng.hpp"
#include "cade/schedule.hpp"
#include "support/scripted_rng.hpp"

using namespace cade;

TEST_CASE("cosine wave hits the closed-form anchors") {
    REQUIRE(cosine_value(0.0, 1.0, 0, 100) == Catch::Approx(1.0).margin(1e-12));
    REQUIRE(cosine_value(0.0, 1.0, 100, 100) == Catch::Approx(0.0).margin(1e-12));
    REQUIRE(cosine_value(0.0, 1.0, 50, 100) == Catch::Approx(0.5).margin(1e-12));
}

TEST_CASE("sine wave hits the closed-form anchors") {
    REQUIRE(sine_value(0.0, 1.0, 0, 100) == Catch::Approx(0.5).margin(1e-12));
    REQUIRE(sine_value(0.0, 1.0, 50, 100) == Catch::Approx(1.0).margin(1e-12));
    REQUIRE(sine_value(0.0, 1.0, 100, 100) == Catch::Approx(0.5).margin(1e-12));
}

TEST_CASE("wave arguments are validated") {
    REQUIRE_THROWS_AS(cosine_value(0.0, 1.0, -1, 100), DomainError);
    REQUIRE_THROWS_AS(cosine_value(0.0, 1.0, 101, 100), DomainError);
    REQUIRE_THROWS_AS(cosine_value(1.0, 0.0, 0, 100), DomainError);
    REQUIRE_THROWS_AS(sine_value(0.0, 1.0, 5, 0), DomainError);
}

TEST_CASE("state starts at the init values") {
    auto s = ScheduleState::make(Strategy::S2, 1e-5, 1e-5, 100);
    REQUIRE(s.f == 1e-5);
    REQUIRE(s.cr == 1e-5);
    REQUIRE(s.f_max == 1e-5);
    REQUIRE(s.f_min == 0.0);
    REQUIRE(s.t == 0);
}

TEST_CASE("S2 reaches the cosine midpoint at half the horizon") {
    auto s = ScheduleState::make(Strategy::S2, 1e-5, 1e-5, 100);
    RngStream rng(1);
    for (int g = 0; g < 50; ++g) schedule_update(s, false, rng);
    REQUIRE(s.t == 50);
    REQUIRE(s.f == Catch::Approx(5e-6).margin(1e-17));
    REQUIRE(s.cr == Catch::Approx(5e-6).margin(1e-17));
}

TEST_CASE("S2 updates regardless of generation success") {
    auto s = ScheduleState::make(Strategy::S2, 1.0, 1.0, 10);
    RngStream rng(1);
    schedule_update(s, true, rng);
    REQUIRE(s.f < 1.0);
}

TEST_CASE("S1 leaves F and CR untouched on improving generations") {
    auto s = ScheduleState::make(Strategy::S1, 0.8, 0.6, 10);
    RngStream rng(1);
    schedule_update(s, true, rng);
    REQUIRE(s.t == 1);
    REQUIRE(s.f == 0.8);
    REQUIRE(s.cr == 0.6);
    schedule_update(s, false, rng);
    REQUIRE(s.f == cosine_value(0.0, 0.8, 2, 10));
    REQUIRE(s.cr == cosine_value(0.0, 0.6, 2, 10));
}

TEST_CASE("S3 adds a scripted uniform draw on top of the wave") {
    // At t = max the cosine term is the minimum (0 here), so F is the draw.
    auto s = ScheduleState::make(Strategy::S3, 1.0, 1.0, 1);
    ScriptedRng rng;
    rng.uniforms = {0.37, 0.12};
    schedule_update(s, true, rng);
    REQUIRE(s.f == Catch::Approx(0.37).margin(1e-12));
    REQUIRE(s.cr == Catch::Approx(0.12).margin(1e-12));
}

TEST_CASE("S4 only perturbs on stagnant generations") {
    auto s = ScheduleState::make(Strategy::S4, 1.0, 1.0, 4);
    ScriptedRng rng;
    schedule_update(s, true, rng); // no draws consumed
    REQUIRE(s.f == 1.0);
    rng.uniforms = {0.25, 0.5};
    schedule_update(s, false, rng);
    REQUIRE(s.f == Catch::Approx(cosine_value(0.0, 1.0, 2, 4) + 0.25));
    REQUIRE(s.cr == Catch::Approx(cosine_value(0.0, 1.0, 2, 4) + 0.5));
}

TEST_CASE("fixed strategy never moves") {
    auto s = ScheduleState::make(Strategy::Fixed, 0.5, 0.9, 10);
    RngStream rng(1);
    for (int g = 0; g < 10; ++g) schedule_update(s, g % 2 == 0, rng);
    REQUIRE(s.f == 0.5);
    REQUIRE(s.cr == 0.9);
    REQUIRE(s.t == 10);
}

TEST_CASE("update period gates recomputation") {
    auto s = ScheduleState::make(Strategy::S2, 1.0, 1.0, 12, 3);
    RngStream rng(1);
    schedule_update(s, false, rng);
    REQUIRE(s.f == 1.0); // t=1, not a multiple of 3
    schedule_update(s, false, rng);
    REQUIRE(s.f == 1.0);
    schedule_update(s, false, rng);
    REQUIRE(s.f == cosine_value(0.0, 1.0, 3, 12));
}

TEST_CASE("iteration counter may not exceed the horizon") {
    auto s = ScheduleState::make(Strategy::S2, 1.0, 1.0, 2);
    RngStream rng(1);
    schedule_update(s, false, rng);
    schedule_update(s, false, rng);
    REQUIRE_THROWS_AS(schedule_update(s, false, rng), DomainError);
}

TEST_CASE("cosine S2 trace is non-increasing and stays inside the bounds") {
    auto s = ScheduleState::make(Strategy::S2, 0.9, 0.7, 200);
    RngStream rng(5);
    double prev_f = s.f, prev_cr = s.cr;
    for (int g = 0; g < 200; ++g) {
        schedule_update(s, false, rng);
        REQUIRE(s.f <= prev_f);
        REQUIRE(s.cr <= prev_cr);
        REQUIRE(s.f >= s.f_min);
        REQUIRE(s.f <= s.f_max);
        REQUIRE(s.cr >= s.cr_min);
        REQUIRE(s.cr <= s.cr_max);
        prev_f = s.f;
        prev_cr = s.cr;
    }
    REQUIRE(s.f == Catch::Approx(0.0).margin(1e-15));
}

TEST_CASE("S3 and S4 stay within twice the configured maximum when the floor is zero") {
    for (auto strat : {Strategy::S3, Strategy::S4}) {
        auto s = ScheduleState::make(strat, 0.9, 0.8, 500);
        RngStream rng(17);
        for (int g = 0; g < 500; ++g) {
            schedule_update(s, false, rng);
            REQUIRE(s.f >= s.f_min);
            REQUIRE(s.f <= 2.0 * s.f_max);
            REQUIRE(s.cr >= s.cr_min);
            REQUIRE(s.cr <= 2.0 * s.cr_max);
        }
    }
}

TEST_CASE("sine wave plugs into the schedule") {
    auto s = ScheduleState::make(Strategy::S2, 1.0, 1.0, 100, 1, Wave::Sin, Wave::Cos);
    RngStream rng(1);
    for (int g = 0; g < 50; ++g) schedule_update(s, false, rng);
    REQUIRE(s.f == Catch::Approx(1.0).margin(1e-12));  // sin peak at half horizon
    REQUIRE(s.cr == Catch::Approx(0.5).margin(1e-12)); // cos midpoint
}

TEST_CASE("strategy and wave parsing") {
    REQUIRE(parse_strategy("2") == Strategy::S2);
    REQUIRE(parse_strategy("fixed") == Strategy::Fixed);
    REQUIRE_THROWS_AS(parse_strategy("5"), ConfigError);
    REQUIRE(parse_wave("sin") == Wave::Sin);
    REQUIRE_THROWS_AS(parse_wave("tan"), ConfigError);
}

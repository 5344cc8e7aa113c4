/*
 * Copyright (c) The hessim project contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "hessim/constants.hpp"
#include "hessim/errors.hpp"
#include "hessim/tank.hpp"

using namespace hessim;

namespace {

TankParams unit_tank() {
    TankParams p;
    p.volume = 1.0;
    p.temperature = 300.0;
    p.p_initial = 101325.0;
    p.p_max = 1e9;
    p.n_initial = 0.0;
    return p;
}

} // namespace

TEST_CASE("pressure_of is the ideal-gas offset above the base pressure") {
    TankParams p = unit_tank();
    CHECK(pressure_of(p, 0.0) == p.p_initial);
    CHECK(pressure_of(p, 100.0) ==
          doctest::Approx(101325.0 + 100.0 * constants::gas_constant * 300.0).epsilon(1e-12));
    CHECK_THROWS_AS(pressure_of(p, -1.0), std::invalid_argument);
}

TEST_CASE("pressure is affine and strictly increasing in stored moles") {
    TankParams p = unit_tank();
    for (double n : {0.5, 3.0, 42.0}) {
        const double gain = pressure_of(p, n) - p.p_initial;
        CHECK(pressure_of(p, 2.0 * n) - p.p_initial == doctest::Approx(2.0 * gain).epsilon(1e-12));
        CHECK(pressure_of(p, n + 1.0) > pressure_of(p, n));
    }
}

TEST_CASE("balanced flows leave the inventory untouched") {
    TankParams p = unit_tank();
    TankState state{5.0, pressure_of(p, 5.0), 0.0};
    const TankStepResult result = tank_step(p, state, 0.3, 0.3, 7.0);
    CHECK(result.state.n_h2 == 5.0);
    CHECK_FALSE(result.starved);
    CHECK(result.state.t == 7.0);
}

TEST_CASE("filling from empty for 100 s at 1 mol/s") {
    TankParams p = unit_tank();
    TankState state = initial_tank_state(p);
    const TankStepResult result = tank_step(p, state, 1.0, 0.0, 100.0);
    CHECK(result.state.n_h2 == 100.0);
    CHECK(result.state.pressure - p.p_initial ==
          doctest::Approx(249433.86).epsilon(1e-9));
}

TEST_CASE("draining past empty clamps at zero and flags starvation") {
    TankParams p = unit_tank();
    TankState state{0.5, pressure_of(p, 0.5), 0.0};
    const TankStepResult result = tank_step(p, state, 0.0, 1.0, 1.0);
    CHECK(result.state.n_h2 == 0.0);
    CHECK(result.starved);
    CHECK(result.state.pressure == p.p_initial);
}

TEST_CASE("available_outflow is the per-step sustainable rate") {
    CHECK(available_outflow(TankState{0.0, 0.0, 0.0}, 0.1) == 0.0);
    CHECK(available_outflow(TankState{10.0, 0.0, 0.0}, 0.1) == 100.0);
    CHECK(available_outflow(TankState{4.157e-2, 0.0, 0.0}, 1.0) == 4.157e-2);
    CHECK_THROWS_AS(available_outflow(TankState{1.0, 0.0, 0.0}, 0.0), std::invalid_argument);
}

TEST_CASE("overpressure raises an error carrying the excess moles") {
    TankParams p = unit_tank();
    p.p_max = pressure_of(p, 10.0); // limit at exactly 10 mol
    TankState state{9.0, pressure_of(p, 9.0), 0.0};
    CHECK_NOTHROW(tank_step(p, state, 1.0, 0.0, 1.0)); // lands exactly on the limit
    try {
        tank_step(p, state, 3.0, 0.0, 1.0); // would store 12 mol
        FAIL("expected OverpressureError");
    } catch (const OverpressureError& e) {
        CHECK(e.excess_mol() == doctest::Approx(2.0).epsilon(1e-9));
        CHECK(e.pressure_pa() > p.p_max);
    }
}

TEST_CASE("tank argument checks") {
    TankParams p = unit_tank();
    TankState state = initial_tank_state(p);
    CHECK_THROWS_AS(tank_step(p, state, 1.0, 0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(tank_step(p, state, -1.0, 0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(tank_step(p, state, 0.0, -1.0, 1.0), std::invalid_argument);

    TankParams bad = p;
    bad.volume = 0.0;
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
    bad = p;
    bad.p_max = bad.p_initial;
    CHECK_THROWS_AS(validate(bad), std::invalid_argument);
}

TEST_CASE("mole conservation against an independent accumulator") {
    TankParams p = unit_tank();
    p.n_initial = 2.0;
    std::mt19937 rng(77);
    std::uniform_real_distribution<double> flow(0.0, 0.05);
    TankState state = initial_tank_state(p);
    double accumulator = p.n_initial;
    const double dt = 0.1;
    for (int k = 0; k < 5000; ++k) {
        const double in = flow(rng);
        const double out = flow(rng) * 0.5; // biased so the tank never empties
        const TankStepResult result = tank_step(p, state, in, out, dt);
        CHECK_FALSE(result.starved);
        state = result.state;
        accumulator += (in - out) * dt;
    }
    CHECK(state.n_h2 == accumulator); // identical recurrence, bit-exact
}

TEST_CASE("piecewise-constant flows match the closed-form trajectory") {
    TankParams p = unit_tank();
    p.n_initial = 1.0;
    const double dt = 0.1;
    // (steps, inflow, outflow) segments.
    const std::vector<std::tuple<int, double, double>> segments = {
        {400, 0.02, 0.0}, {300, 0.0, 0.0}, {500, 0.0, 0.015}, {250, 0.01, 0.002}};
    TankState state = initial_tank_state(p);
    double n_exact = p.n_initial;
    for (const auto& [steps, in, out] : segments) {
        for (int k = 0; k < steps; ++k) {
            state = tank_step(p, state, in, out, dt).state;
        }
        n_exact += (in - out) * (steps * dt);
        const double p_exact = p.p_initial +
                               n_exact * constants::gas_constant * p.temperature / p.volume;
        CHECK(std::abs(state.n_h2 - n_exact) <= 1e-9 * std::max(1.0, n_exact));
        CHECK(std::abs(state.pressure - p_exact) <= 1e-9 * p_exact);
    }
}

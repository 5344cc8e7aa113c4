/*
 * Copyright (c) The hessim project contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "hessim/constants.hpp"
#include "hessim/electrolyzer.hpp"

using namespace hessim;

namespace {

ElectrolyzerParams pure_diode() {
    ElectrolyzerParams p;
    p.n_cell = 1;
    p.eta_faraday = 1.0;
    p.v_reversible = 1.5;
    p.r_ohmic_cell = 0.0;
    p.i_max = 1e6;
    return p;
}

} // namespace

TEST_CASE("current_from_power solves the stack quadratic") {
    ElectrolyzerParams p = pure_diode();
    CHECK(current_from_power(p, 0.0) == 0.0);
    CHECK(current_from_power(p, 150.0) == doctest::Approx(100.0).epsilon(1e-12));

    p.r_ohmic_cell = 0.1;
    const double current = current_from_power(p, 1000.0);
    CHECK(current == doctest::Approx(92.7808556006579).epsilon(1e-9));
    // Back-substitution closes the power balance.
    CHECK(current * p.n_cell * (p.v_reversible + p.r_ohmic_cell * current) ==
          doctest::Approx(1000.0).epsilon(1e-9));

    p.i_max = 50.0;
    CHECK(current_from_power(p, 1000.0) == 50.0);

    CHECK_THROWS_AS(current_from_power(p, -1.0), std::invalid_argument);
}

TEST_CASE("current_from_power back-substitutes to 1e-9 below the clamp") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> cells(1.0, 120.0);
    std::uniform_real_distribution<double> resistance(0.0, 0.02);
    std::uniform_real_distribution<double> power(0.0, 20000.0);
    for (int trial = 0; trial < 200; ++trial) {
        ElectrolyzerParams p;
        p.n_cell = static_cast<int>(cells(rng));
        p.r_ohmic_cell = resistance(rng);
        p.i_max = 1e9;
        const double p_applied = power(rng);
        const double current = current_from_power(p, p_applied);
        const double back = current * p.n_cell * (p.v_reversible + p.r_ohmic_cell * current);
        CHECK(std::abs(back - p_applied) <= 1e-9 * std::max(1.0, p_applied));
    }
}

TEST_CASE("h2_production_rate follows Faraday's law") {
    ElectrolyzerParams p = pure_diode();
    CHECK(h2_production_rate(p, 0.0) == 0.0);
    CHECK(h2_production_rate(p, 192970.66) == doctest::Approx(1.0).epsilon(1e-6));

    ElectrolyzerParams stack;
    stack.n_cell = 40;
    stack.eta_faraday = 0.95;
    const double rate = h2_production_rate(stack, 50.0);
    CHECK(rate == 0.95 * 40 * 50.0 / (2.0 * constants::faraday));
    CHECK(rate == doctest::Approx(9.845e-3).epsilon(2e-4));

    CHECK_THROWS_AS(h2_production_rate(stack, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(h2_production_rate(stack, stack.i_max * 2.0), std::invalid_argument);
}

TEST_CASE("h2 rate is linear in current and Faraday efficiency") {
    ElectrolyzerParams p;
    p.n_cell = 40;
    for (double current : {1.0, 10.0, 80.0}) {
        CHECK(h2_production_rate(p, 2.0 * current) ==
              doctest::Approx(2.0 * h2_production_rate(p, current)).epsilon(1e-14));
    }
    ElectrolyzerParams half = p;
    half.eta_faraday = p.eta_faraday / 2.0;
    CHECK(h2_production_rate(half, 50.0) ==
          doctest::Approx(0.5 * h2_production_rate(p, 50.0)).epsilon(1e-14));
}

TEST_CASE("electrolyzer_step at zero power uses the open-circuit convention") {
    ElectrolyzerParams p; // defaults: 40 cells
    const ElectrolyzerOutput out = electrolyzer_step(p, 0.0);
    CHECK(out.current == 0.0);
    CHECK(out.voltage == p.n_cell * p.v_reversible);
    CHECK(out.h2_rate == 0.0);
    CHECK(out.power_consumed == 0.0);
}

TEST_CASE("electrolyzer_step at 5.8 kW on the default 40-cell stack") {
    ElectrolyzerParams p; // n_cell=40, eta=0.95, r=0.0025 per cell
    const ElectrolyzerOutput out = electrolyzer_step(p, 5800.0);
    // Positive root of 0.1*I^2 + 60*I - 5800 = 0.
    CHECK(out.current == doctest::Approx(84.70768123342687).epsilon(1e-9));
    CHECK(out.h2_rate == doctest::Approx(0.016680731776257042).epsilon(1e-9));
    CHECK(out.power_consumed <= 5800.0);
    CHECK(out.power_consumed == doctest::Approx(5800.0).epsilon(1e-9));
    CHECK(out.power_consumed == doctest::Approx(out.current * out.voltage).epsilon(1e-9));
}

TEST_CASE("electrolyzer_step production is strictly monotone below the clamp") {
    ElectrolyzerParams p;
    double prev = -1.0;
    for (double power = 0.0; power <= 9000.0; power += 450.0) {
        const double rate = electrolyzer_step(p, power).h2_rate;
        CHECK(rate > prev);
        prev = rate;
    }
}

TEST_CASE("clamped step consumes less than applied power") {
    ElectrolyzerParams p;
    p.i_max = 40.0;
    const ElectrolyzerOutput out = electrolyzer_step(p, 9000.0);
    CHECK(out.current == 40.0);
    CHECK(out.power_consumed < 9000.0);
    CHECK(out.power_consumed == out.current * out.voltage);
}

TEST_CASE("energy per mole never beats the reversible floor") {
    ElectrolyzerParams p;
    const double floor = 2.0 * constants::faraday * p.v_reversible / p.eta_faraday;
    for (double power : {10.0, 100.0, 1000.0, 5800.0, 9000.0}) {
        const ElectrolyzerOutput out = electrolyzer_step(p, power);
        CHECK(out.power_consumed / out.h2_rate >= floor * (1.0 - 1e-12));
    }
}

TEST_CASE("electrolyzer parameter validation names the field") {
    ElectrolyzerParams p;
    p.eta_faraday = 1.5;
    CHECK_THROWS_WITH_AS(validate(p), "electrolyzer.eta_faraday must be in (0, 1]",
                         std::invalid_argument);
    p = ElectrolyzerParams{};
    p.n_cell = 0;
    CHECK_THROWS_AS(validate(p), std::invalid_argument);
    p = ElectrolyzerParams{};
    p.r_ohmic_cell = -0.1;
    CHECK_THROWS_AS(validate(p), std::invalid_argument);
}

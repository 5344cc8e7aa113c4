/*
 * Copyright (c) The hessim project contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "hessim/constants.hpp"
#include "hessim/errors.hpp"
#include "hessim/fuel_cell.hpp"

using namespace hessim;

namespace {

// Brute-force polarization scan, independent of the bisection path.
struct Scan {
    double p_max = 0.0;
    double i_at_max = 0.0;
};

Scan dense_scan(const FuelCellParams& p, int points = 1000) {
    Scan scan;
    for (int k = 0; k <= points; ++k) {
        const double current = p.i_max * static_cast<double>(k) / points;
        const double activation =
            p.n_cells * p.tafel_slope *
            std::log(std::max(current, p.i_exchange) / p.i_exchange);
        const double voltage =
            std::max(0.0, p.n_cells * p.e_oc_cell - activation - p.r_ohm_stack * current);
        const double power = current * voltage;
        if (power > scan.p_max) {
            scan.p_max = power;
            scan.i_at_max = current;
        }
    }
    return scan;
}

} // namespace

TEST_CASE("stack_voltage evaluates the three-term polarization curve") {
    FuelCellParams p; // 65 cells, e_oc 1.0, tafel 0.04, i_ex 1, r 0.06
    CHECK(stack_voltage(p, p.i_exchange) ==
          p.n_cells * p.e_oc_cell - p.r_ohm_stack * p.i_exchange);
    CHECK(stack_voltage(p, 100.0) == doctest::Approx(47.02655751643096).epsilon(1e-9));
    CHECK(stack_voltage(p, 0.0) == p.n_cells * p.e_oc_cell);
    CHECK_THROWS_AS(stack_voltage(p, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(stack_voltage(p, p.i_max + 1.0), std::invalid_argument);
}

TEST_CASE("stack_voltage is non-increasing above the exchange current") {
    FuelCellParams p;
    double prev = stack_voltage(p, p.i_exchange);
    for (double current = p.i_exchange; current <= p.i_max; current += 1.0) {
        const double v = stack_voltage(p, current);
        CHECK(v <= prev + 1e-12);
        prev = v;
    }
}

TEST_CASE("stack_voltage floors at zero") {
    FuelCellParams p;
    p.r_ohm_stack = 10.0; // resistive enough to cross zero inside [0, i_max]
    CHECK(stack_voltage(p, p.i_max) == 0.0);
}

TEST_CASE("current_for_power round-trips through the polarization curve") {
    FuelCellParams p;
    CHECK(current_for_power(p, 0.0).current == 0.0);
    CHECK_FALSE(current_for_power(p, 0.0).saturated);
    CHECK_THROWS_AS(current_for_power(p, -1.0), std::invalid_argument);

    for (double request : {50.0, 500.0, 3000.0, 5500.0}) {
        const CurrentSolve solve = current_for_power(p, request);
        CHECK_FALSE(solve.saturated);
        const double delivered = solve.current * stack_voltage(p, solve.current);
        CHECK(std::abs(delivered - request) <= 1e-3 * request);
    }
}

TEST_CASE("current_for_power saturates at the deliverable maximum") {
    FuelCellParams p;
    const Scan scan = dense_scan(p);
    const CurrentSolve solve = current_for_power(p, scan.p_max * 2.0);
    CHECK(solve.saturated);
    CHECK(solve.current == doctest::Approx(scan.i_at_max).epsilon(1e-2));
    const double delivered = solve.current * stack_voltage(p, solve.current);
    CHECK(delivered <= scan.p_max * (1.0 + 1e-6));
    CHECK(delivered >= scan.p_max * (1.0 - 1e-3));
}

TEST_CASE("current_for_power agrees with the dense-scan oracle on random stacks") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> cells(10, 100);
    std::uniform_real_distribution<double> e_oc(0.8, 1.2);
    std::uniform_real_distribution<double> tafel(0.01, 0.08);
    std::uniform_real_distribution<double> i_ex(0.1, 5.0);
    std::uniform_real_distribution<double> r_ohm(0.01, 0.2);
    std::uniform_real_distribution<double> i_max(50.0, 400.0);
    std::uniform_real_distribution<double> fraction(0.05, 0.95);
    for (int trial = 0; trial < 50; ++trial) {
        FuelCellParams p;
        p.n_cells = cells(rng);
        p.e_oc_cell = e_oc(rng);
        p.tafel_slope = tafel(rng);
        p.i_exchange = i_ex(rng);
        p.r_ohm_stack = r_ohm(rng);
        p.i_max = i_max(rng);
        const Scan scan = dense_scan(p);
        const double request = fraction(rng) * scan.p_max;
        const CurrentSolve solve = current_for_power(p, request);
        CHECK_FALSE(solve.saturated);
        const double delivered = solve.current * stack_voltage(p, solve.current);
        CHECK(std::abs(delivered - request) <= 1e-3 * std::max(1.0, request));
        CHECK(delivered <= scan.p_max * (1.0 + 1e-9));
    }
}

TEST_CASE("required_fuel_flow sizes the supply for the target utilization") {
    FuelCellParams p; // u_target 0.98
    CHECK(required_fuel_flow(p, 0.0) == 0.0);
    const double flow = required_fuel_flow(p, 120.0);
    CHECK(flow == 65.0 * 120.0 / (2.0 * constants::faraday * 0.98));
    CHECK(flow == doctest::Approx(4.1248e-2).epsilon(1e-4));
    CHECK(required_fuel_flow(p, 100.0) ==
          doctest::Approx(2.0 * required_fuel_flow(p, 50.0)).epsilon(1e-14));
    CHECK_THROWS_AS(required_fuel_flow(p, p.i_max + 1.0), std::invalid_argument);
}

TEST_CASE("utilization_of") {
    FuelCellParams p;
    CHECK(utilization_of(p, 0.0, 0.0) == 0.0);
    for (double current : {5.0, 60.0, 120.0}) {
        CHECK(utilization_of(p, required_fuel_flow(p, current), current) ==
              doctest::Approx(p.u_target).epsilon(1e-12));
    }
    CHECK(utilization_of(p, 4.1248e-2, 120.0) == doctest::Approx(0.98).epsilon(1e-3));
    CHECK(utilization_of(p, 1e-9, 120.0) == 1.0); // capped
    CHECK_THROWS_AS(utilization_of(p, 0.0, 1.0), FuelStarvationError);
    CHECK_THROWS_AS(utilization_of(p, -1.0, 1.0), std::invalid_argument);
}

TEST_CASE("fuel_cell_step idles at zero request") {
    FuelCellParams p;
    const FuelCellStepResult result = fuel_cell_step(p, {}, 0.0, 1.0);
    CHECK(result.state.current == 0.0);
    CHECK(result.state.p_out == 0.0);
    CHECK(result.state.n_dot_h2_supplied == 0.0);
    CHECK(result.state.utilization == 0.0);
    CHECK_FALSE(result.state.starved);
    CHECK(result.regulator.n_dot_command == 0.0);
}

TEST_CASE("fuel_cell_step with ample fuel hits the request at target utilization") {
    FuelCellParams p;
    const FuelCellStepResult result = fuel_cell_step(p, {}, 3000.0, 10.0);
    CHECK_FALSE(result.state.starved);
    CHECK(std::abs(result.state.p_out - 3000.0) <= 1e-3 * 3000.0);
    CHECK(result.state.utilization == doctest::Approx(p.u_target).epsilon(1e-9));
    CHECK(result.state.p_out ==
          doctest::Approx(result.state.current * result.state.voltage).epsilon(1e-9));
    // Faraday consistency between supplied flow and stack current.
    CHECK(result.state.n_dot_h2_supplied * p.u_target * 2.0 * constants::faraday / p.n_cells ==
          doctest::Approx(result.state.current).epsilon(1e-6));
}

TEST_CASE("fuel_cell_step derates under scarce fuel instead of starving") {
    FuelCellParams p;
    const double full_flow = required_fuel_flow(p, current_for_power(p, 6000.0).current);
    const FuelCellStepResult result = fuel_cell_step(p, {}, 6000.0, full_flow / 2.0);
    CHECK(result.state.starved);
    CHECK(result.state.n_dot_h2_supplied == full_flow / 2.0);
    CHECK(result.state.p_out < 6000.0);
    CHECK(result.state.utilization == doctest::Approx(p.u_target).epsilon(1e-9));
    // The derated point still sits on the polarization curve, below its peak.
    const double replay = result.state.current * stack_voltage(p, result.state.current);
    CHECK(result.state.p_out == doctest::Approx(replay).epsilon(1e-12));
    CHECK(result.state.p_out <= dense_scan(p).p_max * (1.0 + 1e-9));
}

TEST_CASE("utilization never exceeds one across request/supply space") {
    FuelCellParams p;
    for (double request : {0.0, 100.0, 2500.0, 6000.0, 9000.0}) {
        for (double available : {0.0, 1e-4, 1e-3, 1e-2, 0.05, 1.0}) {
            const FuelCellStepResult result = fuel_cell_step(p, {}, request, available);
            CHECK(result.state.utilization <= 1.0);
            CHECK(result.state.utilization >= 0.0);
        }
    }
}

TEST_CASE("max_power_for_flow caps at the polarization maximum") {
    FuelCellParams p;
    CHECK(max_power_for_flow(p, 0.0) == 0.0);
    const double flow_50 = p.n_cells * 50.0 / (2.0 * constants::faraday * p.u_target);
    CHECK(max_power_for_flow(p, flow_50) ==
          doctest::Approx(50.0 * stack_voltage(p, 50.0)).epsilon(1e-9));
    const Scan scan = dense_scan(p);
    CHECK(max_power_for_flow(p, 1e9) <= scan.p_max * (1.0 + 1e-6));
    CHECK(max_power_for_flow(p, 1e9) >= scan.p_max * (1.0 - 1e-3));
}

TEST_CASE("fuel cell parameter validation") {
    FuelCellParams p;
    p.u_target = 1.0;
    CHECK_THROWS_AS(validate(p), std::invalid_argument);
    p = FuelCellParams{};
    p.n_cells = 0;
    CHECK_THROWS_AS(validate(p), std::invalid_argument);
    p = FuelCellParams{};
    p.i_exchange = 0.0;
    CHECK_THROWS_AS(validate(p), std::invalid_argument);
}

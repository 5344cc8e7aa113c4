/*
 * Copyright (c) The hessim project contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include "hessim/fuel_cell.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hessim/constants.hpp"
#include "hessim/errors.hpp"

namespace hessim {

namespace {

double electrical_power(const FuelCellParams& params, double current) {
    return current * stack_voltage(params, current);
}

/// Argmax of the unimodal P(I) on [0, i_max] by ternary search.
double peak_current(const FuelCellParams& params) {
    double lo = 0.0;
    double hi = params.i_max;
    for (int iter = 0; iter < 200; ++iter) {
        const double m1 = lo + (hi - lo) / 3.0;
        const double m2 = hi - (hi - lo) / 3.0;
        if (electrical_power(params, m1) < electrical_power(params, m2)) {
            lo = m1;
        } else {
            hi = m2;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace

void validate(const FuelCellParams& params) {
    if (params.n_cells < 1) {
        throw std::invalid_argument("fuel_cell.n_cells must be >= 1");
    }
    if (!(params.e_oc_cell > 0.0)) {
        throw std::invalid_argument("fuel_cell.e_oc_cell must be > 0");
    }
    if (params.tafel_slope < 0.0) {
        throw std::invalid_argument("fuel_cell.tafel_slope must be >= 0");
    }
    if (!(params.i_exchange > 0.0)) {
        throw std::invalid_argument("fuel_cell.i_exchange must be > 0");
    }
    if (params.r_ohm_stack < 0.0) {
        throw std::invalid_argument("fuel_cell.r_ohm_stack must be >= 0");
    }
    if (!(params.p_nominal > 0.0)) {
        throw std::invalid_argument("fuel_cell.p_nominal must be > 0");
    }
    if (!(params.i_max > 0.0)) {
        throw std::invalid_argument("fuel_cell.i_max must be > 0");
    }
    if (!(params.u_target > 0.0 && params.u_target < 1.0)) {
        throw std::invalid_argument("fuel_cell.u_target must be in (0, 1)");
    }
}

double stack_voltage(const FuelCellParams& params, double current) {
    if (current < 0.0 || current > params.i_max) {
        throw std::invalid_argument("fuel_cell: current outside [0, i_max]");
    }
    const double activation =
        params.n_cells * params.tafel_slope *
        std::log(std::max(current, params.i_exchange) / params.i_exchange);
    const double v = params.n_cells * params.e_oc_cell - activation -
                     params.r_ohm_stack * current;
    return std::max(0.0, v);
}

CurrentSolve current_for_power(const FuelCellParams& params, double p_request) {
    if (p_request < 0.0) {
        throw std::invalid_argument("fuel_cell: power request must be non-negative");
    }
    if (p_request == 0.0) {
        return {0.0, false};
    }
    const double i_peak = peak_current(params);
    const double p_peak = electrical_power(params, i_peak);
    if (p_request > p_peak) {
        return {i_peak, true};
    }
    // P(I) is increasing on [0, i_peak]; bisect for the smallest covering current.
    double lo = 0.0;
    double hi = i_peak;
    while (hi - lo > 1e-12 * std::max(1.0, params.i_max)) {
        const double mid = 0.5 * (lo + hi);
        if (electrical_power(params, mid) >= p_request) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return {hi, false};
}

double required_fuel_flow(const FuelCellParams& params, double current) {
    if (current < 0.0 || current > params.i_max) {
        throw std::invalid_argument("fuel_cell: current outside [0, i_max]");
    }
    return params.n_cells * current /
           (constants::charge_per_mol_h2 * params.u_target);
}

double utilization_of(const FuelCellParams& params, double n_dot_supplied, double current) {
    if (n_dot_supplied < 0.0) {
        throw std::invalid_argument("fuel_cell: supplied flow must be non-negative");
    }
    const double consumed = params.n_cells * current / constants::charge_per_mol_h2;
    if (n_dot_supplied == 0.0) {
        if (current > 0.0) {
            throw FuelStarvationError("fuel_cell: positive current with zero hydrogen supply");
        }
        return 0.0;
    }
    return std::min(1.0, consumed / n_dot_supplied);
}

double max_power_for_flow(const FuelCellParams& params, double n_dot) {
    if (n_dot < 0.0) {
        throw std::invalid_argument("fuel_cell: flow must be non-negative");
    }
    const double i_from_flow =
        n_dot * params.u_target * constants::charge_per_mol_h2 / params.n_cells;
    const double i = std::min({i_from_flow, params.i_max, peak_current(params)});
    return electrical_power(params, i);
}

FuelCellStepResult fuel_cell_step(const FuelCellParams& params,
                                  const FlowRegulatorState& /*regulator*/,
                                  double p_request, double available_flow) {
    if (p_request < 0.0 || available_flow < 0.0) {
        throw std::invalid_argument("fuel_cell: step inputs must be non-negative");
    }
    double current = current_for_power(params, p_request).current;
    double flow_command = required_fuel_flow(params, current);
    FuelCellState state;
    // Tolerate round-trip noise from the power solve before declaring a shortfall.
    if (flow_command <= available_flow * (1.0 + 1e-12)) {
        state.n_dot_h2_supplied = std::min(flow_command, available_flow);
        state.starved = false;
    } else {
        state.n_dot_h2_supplied = available_flow;
        current = state.n_dot_h2_supplied * params.u_target *
                  constants::charge_per_mol_h2 / params.n_cells;
        state.starved = true;
    }
    state.current = current;
    state.voltage = stack_voltage(params, current);
    state.p_out = current * state.voltage;
    state.utilization = utilization_of(params, state.n_dot_h2_supplied, current);
    return {state, FlowRegulatorState{state.n_dot_h2_supplied}};
}

} // namespace hessim

/*
 * Copyright (c) The hessim project contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

namespace hessim {

/// PEM fuel-cell stack with a three-term polarization curve: open-circuit
/// voltage, Tafel activation drop, and ohmic drop. The flow regulator sizes
/// the supply so the stack consumes a u_target fraction of it.
struct FuelCellParams {
    int n_cells = 65;          // series cells
    double e_oc_cell = 1.0;    // V, open circuit per cell
    double tafel_slope = 0.04; // V per ln(A)
    double i_exchange = 1.0;   // A; activation term is zero at or below this
    double r_ohm_stack = 0.06; // ohm, whole stack
    double p_nominal = 6000.0; // W
    double i_max = 140.0;      // A
    double u_target = 0.98;    // hydrogen utilization setpoint, (0, 1)

    bool operator==(const FuelCellParams&) const = default;
};

struct FuelCellState {
    double current = 0.0;           // A
    double voltage = 0.0;           // V
    double p_out = 0.0;             // W
    double n_dot_h2_supplied = 0.0; // mol/s drawn from the tank
    double utilization = 0.0;       // consumed / supplied, in [0, 1]
    bool starved = false;           // fuel shortfall forced a derate
};

struct FlowRegulatorState {
    double n_dot_command = 0.0; // mol/s, last commanded supply flow
};

struct CurrentSolve {
    double current = 0.0;
    bool saturated = false; // request exceeded the deliverable maximum
};

struct FuelCellStepResult {
    FuelCellState state;
    FlowRegulatorState regulator;
};

void validate(const FuelCellParams& params);

/// Stack terminal voltage at the given current, floored at zero.
double stack_voltage(const FuelCellParams& params, double current);

/// Smallest current whose electrical output covers p_request, found by
/// bisection on the rising branch of P(I). Saturates at the deliverable
/// maximum when the request exceeds it.
CurrentSolve current_for_power(const FuelCellParams& params, double p_request);

/// Supply flow at which consumption/supply equals u_target, mol/s.
double required_fuel_flow(const FuelCellParams& params, double current);

/// Consumed/supplied hydrogen ratio, capped at 1. Zero current with zero
/// supply reads as 0; positive current with zero supply throws
/// FuelStarvationError.
double utilization_of(const FuelCellParams& params, double n_dot_supplied, double current);

/// Largest electrical power sustainable on a supply of at most n_dot, W.
double max_power_for_flow(const FuelCellParams& params, double n_dot);

/// One step of the stack plus flow regulator. With ample fuel the stack
/// meets p_request at u_target utilization; with scarce fuel the current is
/// derated to what available_flow supports and the starved flag is set.
FuelCellStepResult fuel_cell_step(const FuelCellParams& params,
                                  const FlowRegulatorState& regulator,
                                  double p_request, double available_flow);

} // namespace hessim

/*
 * Copyright (c) The hessim project contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

namespace hessim {

struct TankParams {
    double volume = 0.5;        // m^3
    double temperature = 300.0; // K
    double p_initial = 101325.0;// Pa at zero stored moles
    double p_max = 3.5e7;       // Pa, safety limit
    double n_initial = 10.0;    // mol at t = 0

    bool operator==(const TankParams&) const = default;
};

/// Stored inventory is the single source of truth; pressure is derived.
struct TankState {
    double n_h2 = 0.0;     // mol
    double pressure = 0.0; // Pa, = p_initial + n_h2*R*T/V
    double t = 0.0;        // s of last update
};

struct TankStepResult {
    TankState state;
    bool starved = false; // requested outflow exceeded inventory this step
};

void validate(const TankParams& params);

/// Ideal-gas pressure above the base pressure for n_h2 stored moles.
double pressure_of(const TankParams& params, double n_h2);

/// Initial state from params (n_initial moles at t = 0).
TankState initial_tank_state(const TankParams& params);

/// Integrates one step of the mole balance. Inventory clamps at zero with the
/// starved flag set. Throws OverpressureError (with the excess moles) if the
/// new pressure would exceed p_max; the caller decides curtailment.
TankStepResult tank_step(const TankParams& params, const TankState& state,
                         double n_dot_in, double n_dot_out, double dt);

/// Largest outflow the inventory can sustain for one step of length dt.
double available_outflow(const TankState& state, double dt);

} // namespace hessim

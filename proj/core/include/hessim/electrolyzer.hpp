/*
 * Copyright (c) The hessim project contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

namespace hessim {

/// Lumped PEM electrolyzer stack. Electrically the stack is a per-cell
/// constant voltage drop (the diode pair) in series with an ohmic resistor;
/// hydrogen output follows Faraday's law scaled by the Faraday efficiency.
struct ElectrolyzerParams {
    int n_cell = 40;               // series cells
    double eta_faraday = 0.95;     // (0, 1]
    double v_reversible = 1.5;     // V per cell, two 0.75 V drops
    double r_ohmic_cell = 0.0025;  // ohm per cell, slope of the ohmic I-V region
    double i_max = 200.0;          // A, stack current limit
    double temperature = 333.15;   // K, carried for configs; the default model does not use it

    bool operator==(const ElectrolyzerParams&) const = default;
};

struct ElectrolyzerOutput {
    double current = 0.0;        // A
    double voltage = 0.0;        // V, stack terminal
    double h2_rate = 0.0;        // mol/s
    double power_consumed = 0.0; // W
};

/// Validates parameter invariants; throws std::invalid_argument naming the field.
void validate(const ElectrolyzerParams& params);

/// Stack current absorbed when p_applied is imposed on the stack terminals.
/// Positive root of n_cell*r*I^2 + n_cell*v_rev*I - p_applied = 0, clamped to i_max.
double current_from_power(const ElectrolyzerParams& params, double p_applied);

/// Faraday-law hydrogen production, mol/s: eta_F * n_cell * I / (2F).
double h2_production_rate(const ElectrolyzerParams& params, double current);

/// One evaluation of the stack: current draw, terminal voltage, production.
/// power_consumed never exceeds p_applied; it is lower only when the current
/// clamps at i_max.
ElectrolyzerOutput electrolyzer_step(const ElectrolyzerParams& params, double p_applied);

} // namespace hessim

/*
 * Copyright (c) The hessim project contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <utility>

namespace hessim {

/// Coulomb-counting battery with power limits, one-way efficiencies, and a
/// linear self-discharge term. Interacts with the rest of the system purely
/// at the power level.
struct BatteryParams {
    double capacity = 3.6e7;           // J
    double soc_min = 0.1;
    double soc_max = 0.9;
    double p_charge_max = 5000.0;      // W
    double p_discharge_max = 5000.0;   // W
    double eta_charge = 0.95;          // (0, 1]
    double eta_discharge = 0.95;       // (0, 1]
    double self_discharge_rate = 1e-7; // fraction per second

    bool operator==(const BatteryParams&) const = default;
};

struct BatteryState {
    double soc = 0.5;
};

void validate(const BatteryParams& params);

/// Applies a signed power command (positive discharges to the bus) for dt
/// seconds. The command clamps to the power limits and to whatever keeps the
/// SOC inside [soc_min, soc_max]. Returns the new state and the power
/// actually delivered (+) or absorbed (-).
std::pair<BatteryState, double> battery_step(const BatteryParams& params,
                                             const BatteryState& state,
                                             double p_command, double dt);

} // namespace hessim

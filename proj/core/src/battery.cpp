/*
 * Copyright (c) The hessim project contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include "hessim/battery.hpp"

#include <algorithm>
#include <stdexcept>

namespace hessim {

void validate(const BatteryParams& params) {
    if (!(params.capacity > 0.0)) {
        throw std::invalid_argument("battery.capacity must be > 0");
    }
    if (!(params.soc_min >= 0.0 && params.soc_min < params.soc_max && params.soc_max <= 1.0)) {
        throw std::invalid_argument("battery soc window must satisfy 0 <= soc_min < soc_max <= 1");
    }
    if (params.p_charge_max < 0.0 || params.p_discharge_max < 0.0) {
        throw std::invalid_argument("battery power limits must be >= 0");
    }
    if (!(params.eta_charge > 0.0 && params.eta_charge <= 1.0) ||
        !(params.eta_discharge > 0.0 && params.eta_discharge <= 1.0)) {
        throw std::invalid_argument("battery efficiencies must be in (0, 1]");
    }
    if (params.self_discharge_rate < 0.0) {
        throw std::invalid_argument("battery.self_discharge_rate must be >= 0");
    }
}

std::pair<BatteryState, double> battery_step(const BatteryParams& params,
                                             const BatteryState& state,
                                             double p_command, double dt) {
    if (!(dt > 0.0)) {
        throw std::invalid_argument("battery: dt must be > 0");
    }
    const double soc_idle = state.soc * (1.0 - params.self_discharge_rate * dt);
    double p_actual;
    double soc_next;
    if (p_command > 0.0) {
        // Discharge: limited by power rating and by the energy above soc_min.
        const double headroom = std::max(0.0, soc_idle - params.soc_min);
        const double p_soc_limit = headroom * params.capacity * params.eta_discharge / dt;
        p_actual = std::min({p_command, params.p_discharge_max, p_soc_limit});
        soc_next = soc_idle - (p_actual * dt / params.eta_discharge) / params.capacity;
    } else if (p_command < 0.0) {
        // Charge: limited by power rating and by the room below soc_max.
        const double room = std::max(0.0, params.soc_max - soc_idle);
        const double p_soc_limit = room * params.capacity / (dt * params.eta_charge);
        const double p_charge = std::min({-p_command, params.p_charge_max, p_soc_limit});
        p_actual = -p_charge;
        soc_next = soc_idle + (p_charge * dt * params.eta_charge) / params.capacity;
    } else {
        p_actual = 0.0;
        soc_next = soc_idle;
    }
    // Self-discharge alone may not push the bookkeeping outside the window.
    soc_next = std::clamp(soc_next, params.soc_min, params.soc_max);
    return {BatteryState{soc_next}, p_actual};
}

} // namespace hessim

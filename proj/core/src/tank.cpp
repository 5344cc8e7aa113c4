/*
 * Copyright (c) The hessim project contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include "hessim/tank.hpp"

#include <stdexcept>

#include "hessim/constants.hpp"
#include "hessim/errors.hpp"

namespace hessim {

void validate(const TankParams& params) {
    if (!(params.volume > 0.0)) {
        throw std::invalid_argument("tank.volume must be > 0");
    }
    if (!(params.temperature > 0.0)) {
        throw std::invalid_argument("tank.temperature must be > 0");
    }
    if (params.p_initial < 0.0) {
        throw std::invalid_argument("tank.p_initial must be >= 0");
    }
    if (!(params.p_max > params.p_initial)) {
        throw std::invalid_argument("tank.p_max must be > tank.p_initial");
    }
    if (params.n_initial < 0.0) {
        throw std::invalid_argument("tank.n_initial must be >= 0");
    }
}

double pressure_of(const TankParams& params, double n_h2) {
    if (n_h2 < 0.0) {
        throw std::invalid_argument("tank: stored moles must be non-negative");
    }
    return params.p_initial +
           n_h2 * constants::gas_constant * params.temperature / params.volume;
}

TankState initial_tank_state(const TankParams& params) {
    return {params.n_initial, pressure_of(params, params.n_initial), 0.0};
}

TankStepResult tank_step(const TankParams& params, const TankState& state,
                         double n_dot_in, double n_dot_out, double dt) {
    if (!(dt > 0.0)) {
        throw std::invalid_argument("tank: dt must be > 0");
    }
    if (n_dot_in < 0.0 || n_dot_out < 0.0) {
        throw std::invalid_argument("tank: flows must be non-negative");
    }
    const double unclamped = state.n_h2 + (n_dot_in - n_dot_out) * dt;
    TankStepResult result;
    result.starved = unclamped < 0.0;
    result.state.n_h2 = result.starved ? 0.0 : unclamped;
    result.state.pressure = pressure_of(params, result.state.n_h2);
    result.state.t = state.t + dt;
    if (result.state.pressure > params.p_max) {
        const double n_at_limit = (params.p_max - params.p_initial) * params.volume /
                                  (constants::gas_constant * params.temperature);
        throw OverpressureError(result.state.n_h2 - n_at_limit, result.state.pressure);
    }
    return result;
}

double available_outflow(const TankState& state, double dt) {
    if (!(dt > 0.0)) {
        throw std::invalid_argument("tank: dt must be > 0");
    }
    return state.n_h2 / dt;
}

} // namespace hessim

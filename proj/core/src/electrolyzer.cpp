/*
 * Copyright (c) The hessim project contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include "hessim/electrolyzer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hessim/constants.hpp"

namespace hessim {

void validate(const ElectrolyzerParams& params) {
    if (params.n_cell < 1) {
        throw std::invalid_argument("electrolyzer.n_cell must be >= 1");
    }
    if (!(params.eta_faraday > 0.0 && params.eta_faraday <= 1.0)) {
        throw std::invalid_argument("electrolyzer.eta_faraday must be in (0, 1]");
    }
    if (!(params.v_reversible > 0.0)) {
        throw std::invalid_argument("electrolyzer.v_reversible must be > 0");
    }
    if (params.r_ohmic_cell < 0.0) {
        throw std::invalid_argument("electrolyzer.r_ohmic_cell must be >= 0");
    }
    if (!(params.i_max > 0.0)) {
        throw std::invalid_argument("electrolyzer.i_max must be > 0");
    }
    if (!(params.temperature > 0.0)) {
        throw std::invalid_argument("electrolyzer.temperature must be > 0");
    }
}

double current_from_power(const ElectrolyzerParams& params, double p_applied) {
    if (p_applied < 0.0) {
        throw std::invalid_argument("electrolyzer: applied power must be non-negative");
    }
    if (p_applied == 0.0) {
        return 0.0;
    }
    const double a = params.n_cell * params.r_ohmic_cell;
    const double b = params.n_cell * params.v_reversible;
    double current;
    if (a == 0.0) {
        current = p_applied / b;
    } else {
        current = (-b + std::sqrt(b * b + 4.0 * a * p_applied)) / (2.0 * a);
    }
    current = std::max(0.0, current);
    return std::min(current, params.i_max);
}

double h2_production_rate(const ElectrolyzerParams& params, double current) {
    if (current < 0.0 || current > params.i_max) {
        throw std::invalid_argument("electrolyzer: current outside [0, i_max]");
    }
    return params.eta_faraday * params.n_cell * current / constants::charge_per_mol_h2;
}

ElectrolyzerOutput electrolyzer_step(const ElectrolyzerParams& params, double p_applied) {
    const double current = current_from_power(params, p_applied);
    ElectrolyzerOutput out;
    out.current = current;
    // Open-circuit convention at zero current: terminal sits at the diode drop.
    out.voltage = params.n_cell * (params.v_reversible + params.r_ohmic_cell * current);
    out.h2_rate = h2_production_rate(params, current);
    if (current < params.i_max) {
        // Exact solve below the clamp; cap at p_applied to absorb root round-off.
        out.power_consumed = std::min(p_applied, current * out.voltage);
    } else {
        out.power_consumed = current * out.voltage;
    }
    if (current == 0.0) {
        out.power_consumed = 0.0;
    }
    return out;
}

} // namespace hessim

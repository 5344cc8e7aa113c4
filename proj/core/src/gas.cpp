/*
 * Copyright (c) The hessim project contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include "hessim/gas.hpp"

#include <stdexcept>

#include "hessim/constants.hpp"

namespace hessim {

namespace {

void check_state(double temperature_k, double pressure_pa) {
    if (temperature_k <= 0.0) {
        throw std::invalid_argument("gas conversion: temperature must be positive");
    }
    if (pressure_pa <= 0.0) {
        throw std::invalid_argument("gas conversion: pressure must be positive");
    }
}

} // namespace

double mol_rate_to_volumetric(double n_dot, double temperature_k, double pressure_pa) {
    check_state(temperature_k, pressure_pa);
    if (n_dot < 0.0) {
        throw std::invalid_argument("gas conversion: flow must be non-negative");
    }
    return n_dot * constants::gas_constant * temperature_k / pressure_pa;
}

double volumetric_to_mol_rate(double q, double temperature_k, double pressure_pa) {
    check_state(temperature_k, pressure_pa);
    if (q < 0.0) {
        throw std::invalid_argument("gas conversion: flow must be non-negative");
    }
    return q * pressure_pa / (constants::gas_constant * temperature_k);
}

double mol_rate_to_mass_rate(double n_dot) {
    return n_dot * constants::molar_mass_h2;
}

} // namespace hessim

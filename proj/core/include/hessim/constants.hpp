/*
 * Copyright (c) The hessim project contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

namespace hessim::constants {

// Physical constants used across the simulator. SI units throughout.
inline constexpr double faraday = 96485.332;        // C/mol
inline constexpr double gas_constant = 8.314462;    // J/(mol*K)
inline constexpr double molar_mass_h2 = 2.016e-3;   // kg/mol
inline constexpr int electrons_per_h2 = 2;          // electrons per H2 molecule
inline constexpr double stp_pressure = 101325.0;    // Pa
inline constexpr double stp_temperature = 273.15;   // K

// Charge transferred per mole of H2 (2F), C/mol.
inline constexpr double charge_per_mol_h2 = electrons_per_h2 * faraday;

} // namespace hessim::constants

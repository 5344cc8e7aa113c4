/*
 * Copyright (c) The hessim project contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

namespace hessim {

// Ideal-gas conversions between molar and volumetric hydrogen flow.
// All internal bookkeeping is in mol/s; these exist for IO and display.

/// mol/s -> m^3/s at the given temperature and pressure.
double mol_rate_to_volumetric(double n_dot, double temperature_k, double pressure_pa);

/// m^3/s -> mol/s at the given temperature and pressure. Exact inverse of
/// mol_rate_to_volumetric for the same (T, P).
double volumetric_to_mol_rate(double q, double temperature_k, double pressure_pa);

/// mol/s -> kg/s for hydrogen.
double mol_rate_to_mass_rate(double n_dot);

/// m^3/s -> liters per minute, for display.
inline double cubic_m_per_s_to_liters_per_min(double q) { return q * 60.0e3; }

} // namespace hessim

/*
 * Copyright (c) The hessim project contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <stdexcept>
#include <string>

namespace hessim {

/// Tank pressure would exceed the configured safety limit. Carries the
/// moles above the limit so the caller can decide how to curtail.
class OverpressureError : public std::runtime_error {
public:
    OverpressureError(double excess_mol, double pressure_pa)
        : std::runtime_error("tank overpressure: " + std::to_string(pressure_pa) +
                             " Pa exceeds limit (" + std::to_string(excess_mol) +
                             " mol above limit)"),
          excess_mol_(excess_mol),
          pressure_pa_(pressure_pa) {}

    double excess_mol() const { return excess_mol_; }
    double pressure_pa() const { return pressure_pa_; }

private:
    double excess_mol_;
    double pressure_pa_;
};

/// Hydrogen utilization is undefined: positive stack current with zero supply.
class FuelStarvationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Configuration file problem. Message names the offending key.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Profile file problem. Message names the offending file and row.
class ProfileError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace hessim

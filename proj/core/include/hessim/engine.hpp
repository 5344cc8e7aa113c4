/*
 * Copyright (c) The hessim project contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <string>
#include <vector>

#include "hessim/scenario.hpp"

namespace hessim {

struct Signal {
    std::string name;
    std::string unit;
    std::vector<double> values;
};

struct AuditReport {
    double mole_balance_error = 0.0;  // mol, logged tank state vs replayed flows
    double bus_energy_residual = 0.0; // J, integral of |bus power residual|
    double max_utilization = 0.0;
    long starvation_steps = 0;
    long overpressure_steps = 0;
};

/// All signals share the timestamp vector t (one row per simulation step,
/// state-type signals sampled at the start of the step).
struct SimResult {
    std::string scenario_name;
    double dt = 0.0;
    std::vector<double> t;
    std::vector<Signal> signals;
    AuditReport audit;
    double final_tank_moles = 0.0;
    double final_tank_pressure = 0.0;
    double final_battery_soc = 0.0;

    const Signal* find(const std::string& name) const;
    /// Values of a signal by name; throws std::out_of_range if absent.
    const std::vector<double>& values(const std::string& name) const;
    TimeSeries as_time_series(const std::string& name) const;
};

/// Runs the scenario with the fixed per-step order: sample profiles,
/// dispatch, controller updates and converter transfers, electrolyzer,
/// fuel cell, battery, tank integration, record. Deterministic: identical
/// scenarios produce bit-identical results.
SimResult run(const Scenario& scenario);

/// Recomputes the conservation bookkeeping from the logged series with an
/// independent accumulator and scans the quality flags.
AuditReport audit(const SimResult& result, const Scenario& scenario);

struct SweepOutcome {
    std::string name;
    bool ok = false;
    std::string error;
    SimResult result;
};

/// Runs each scenario independently; outcomes keep the input order and do
/// not depend on parallelism. Per-scenario failures are collected, not
/// rethrown.
std::vector<SweepOutcome> sweep(const std::vector<Scenario>& scenarios, int parallelism = 1);

} // namespace hessim

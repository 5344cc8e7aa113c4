/*
 * Copyright (c) The hessim project contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include "hessim/battery.hpp"
#include "hessim/converter.hpp"
#include "hessim/fuel_cell.hpp"
#include "hessim/tank.hpp"

namespace hessim {

struct GridState {
    double p_renewable = 0.0; // W
    double p_load = 0.0;      // W
    double surplus = 0.0;     // W, = p_renewable - p_load
    double v_bus = 1000.0;    // V, nominal
};

enum class DispatchMode {
    Deficit = -1,
    Balanced = 0,
    Surplus = 1,
};

/// Per-step power references. The electrolyzer and fuel-cell references are
/// mutually exclusive; the battery reference is signed with positive meaning
/// charge (absorb from the bus).
struct DispatchCommand {
    double p_electrolyzer_ref = 0.0; // W, >= 0
    double p_fuelcell_ref = 0.0;     // W, >= 0, bus-side demand on the fuel-cell path
    double p_battery_ref = 0.0;      // W, signed; + charges, - discharges
    DispatchMode mode = DispatchMode::Balanced;
};

/// First-order low-pass on the surplus; the slow component goes to hydrogen,
/// the residual to the battery.
struct SplitFilterState {
    double slow_component = 0.0; // W
    double tau = 10.0;           // s, > 0
};

struct EmsParams {
    double deadband = 10.0; // W around zero surplus
    double tau = 10.0;      // s, split filter time constant

    bool operator==(const EmsParams&) const = default;
};

/// Everything the dispatch policy needs to shape and cap references.
struct DispatchContext {
    EmsParams ems;
    bool battery_enabled = false;
    FuelCellParams fuel_cell;
    ConverterParams fc_converter;
    BatteryParams battery;
    ConverterParams battery_converter;
    double dt = 0.1; // s
};

struct DispatchStep {
    DispatchCommand command;
    SplitFilterState filter;
    double battery_ref_unclamped = 0.0; // W, pre-limit residual (split completeness)
};

void validate(const EmsParams& params);

DispatchMode classify(double surplus, double deadband);

SplitFilterState split_filter_update(const SplitFilterState& state, double surplus, double dt);

/// Supervisory policy: surplus charges via the electrolyzer, deficit
/// discharges via the fuel cell (capped by rating and tank availability),
/// and with the battery enabled the low-pass split sends the fast residual
/// to the battery. carryover_w is the bus-side power the battery could not
/// take last step, folded back into the hydrogen path.
DispatchStep dispatch(const GridState& grid, const SplitFilterState& filter,
                      const TankState& tank, const BatteryState& battery,
                      const DispatchContext& ctx, double carryover_w = 0.0);

} // namespace hessim

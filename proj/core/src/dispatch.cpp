/*
 * Copyright (c) The hessim project contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include "hessim/dispatch.hpp"

#include <algorithm>
#include <stdexcept>

namespace hessim {

void validate(const EmsParams& params) {
    if (params.deadband < 0.0) {
        throw std::invalid_argument("ems.deadband must be >= 0");
    }
    if (!(params.tau > 0.0)) {
        throw std::invalid_argument("ems.tau must be > 0");
    }
}

DispatchMode classify(double surplus, double deadband) {
    if (deadband < 0.0) {
        throw std::invalid_argument("classify: deadband must be >= 0");
    }
    if (surplus > deadband) {
        return DispatchMode::Surplus;
    }
    if (surplus < -deadband) {
        return DispatchMode::Deficit;
    }
    return DispatchMode::Balanced;
}

SplitFilterState split_filter_update(const SplitFilterState& state, double surplus, double dt) {
    if (!(dt > 0.0)) {
        throw std::invalid_argument("split filter: dt must be > 0");
    }
    SplitFilterState next = state;
    next.slow_component = state.slow_component + (dt / state.tau) * (surplus - state.slow_component);
    return next;
}

DispatchStep dispatch(const GridState& grid, const SplitFilterState& filter,
                      const TankState& tank, const BatteryState& /*battery*/,
                      const DispatchContext& ctx, double carryover_w) {
    DispatchStep step;
    step.command.mode = classify(grid.surplus, ctx.ems.deadband);
    step.filter = split_filter_update(filter, grid.surplus, ctx.dt);

    // Hydrogen path target: the slow component when splitting, the whole
    // surplus otherwise; plus whatever the battery rejected last step.
    const double hydrogen_target =
        (ctx.battery_enabled ? step.filter.slow_component : grid.surplus) +
        (ctx.battery_enabled ? carryover_w : 0.0);

    double hydrogen_signed = 0.0;
    switch (step.command.mode) {
    case DispatchMode::Surplus:
        step.command.p_electrolyzer_ref = std::max(0.0, hydrogen_target);
        hydrogen_signed = step.command.p_electrolyzer_ref;
        break;
    case DispatchMode::Deficit: {
        const double demand = std::max(0.0, -hydrogen_target);
        const double rating_cap = transfer(ctx.fc_converter, ctx.fuel_cell.p_nominal);
        const double tank_cap = transfer(
            ctx.fc_converter,
            max_power_for_flow(ctx.fuel_cell, available_outflow(tank, ctx.dt)));
        step.command.p_fuelcell_ref = std::min({demand, rating_cap, tank_cap});
        hydrogen_signed = -step.command.p_fuelcell_ref;
        break;
    }
    case DispatchMode::Balanced:
        break;
    }

    if (ctx.battery_enabled) {
        step.battery_ref_unclamped = grid.surplus - hydrogen_signed;
        // Battery power limits mapped to the bus side of its converter.
        const double eta_chg = efficiency_at(ctx.battery_converter, ctx.battery.p_charge_max);
        const double eta_dis = efficiency_at(ctx.battery_converter, ctx.battery.p_discharge_max);
        const double charge_cap = ctx.battery.p_charge_max / eta_chg;
        const double discharge_cap = ctx.battery.p_discharge_max * eta_dis;
        step.command.p_battery_ref =
            std::clamp(step.battery_ref_unclamped, -discharge_cap, charge_cap);
    } else {
        step.battery_ref_unclamped = 0.0;
        step.command.p_battery_ref = 0.0;
    }
    return step;
}

} // namespace hessim

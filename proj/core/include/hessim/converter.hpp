/*
 * Copyright (c) The hessim project contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <utility>
#include <vector>

namespace hessim {

enum class ConverterDirection {
    bus_to_device, // step-down feeding the electrolyzer
    device_to_bus, // boost feeding the grid
};

/// Averaged power-flow converter: rating clamp then efficiency. The optional
/// efficiency curve maps input power to efficiency (piecewise linear, clamped
/// at the ends); when empty the fixed efficiency applies at all loads.
struct ConverterParams {
    double efficiency = 0.967; // (0, 1], used when the curve is empty
    double p_rated = 10000.0;  // W
    ConverterDirection direction = ConverterDirection::bus_to_device;
    std::vector<std::pair<double, double>> efficiency_curve; // (input W, efficiency)

    bool operator==(const ConverterParams&) const = default;
};

/// Perturb-and-observe power-reference controller state.
struct PnoState {
    double p_ref = 0.0;       // W, current operating reference
    double step_size = 50.0;  // W per perturbation
    double last_delta = 50.0; // W, previous signed perturbation
    double last_objective = 0.0; // W, previous |target - measured|; seed with +inf
};

void validate(const ConverterParams& params);

/// Efficiency at the given input power (curve interpolation or the fixed value).
double efficiency_at(const ConverterParams& params, double p_in);

/// Output power for a given input power: min(p_in, p_rated) * efficiency.
double transfer(const ConverterParams& params, double p_in);

/// Fresh controller state ramping upward from zero.
PnoState initial_pno_state(double step_size);

/// One P&O iteration. Keeps the previous direction while the tracking error
/// improves (ties keep it too), reverses otherwise, and clamps the reference
/// to [0, min(p_target, p_rated)]. Holds inside the deadband.
PnoState pno_update(const ConverterParams& params, const PnoState& state,
                    double p_measured, double p_target);

/// Boost-side dispatch: P&O toward the device-side request implied by the
/// grid demand, capped by the power the device can supply. Returns the
/// device-side draw and the updated controller state; the bus-side injection
/// is transfer(draw).
std::pair<double, PnoState> boost_dispatch(const ConverterParams& params,
                                           const PnoState& state,
                                           double p_grid_demand, double p_available);

} // namespace hessim

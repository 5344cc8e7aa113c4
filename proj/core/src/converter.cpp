/*
 * Copyright (c) The hessim project contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include "hessim/converter.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hessim {

void validate(const ConverterParams& params) {
    if (!(params.efficiency > 0.0 && params.efficiency <= 1.0)) {
        throw std::invalid_argument("converter.efficiency must be in (0, 1]");
    }
    if (!(params.p_rated > 0.0)) {
        throw std::invalid_argument("converter.p_rated must be > 0");
    }
    double prev_p = -std::numeric_limits<double>::infinity();
    for (const auto& [p, eta] : params.efficiency_curve) {
        if (p < 0.0 || p <= prev_p) {
            throw std::invalid_argument(
                "converter.efficiency_curve powers must be non-negative and strictly increasing");
        }
        if (!(eta > 0.0 && eta <= 1.0)) {
            throw std::invalid_argument("converter.efficiency_curve efficiencies must be in (0, 1]");
        }
        prev_p = p;
    }
}

double efficiency_at(const ConverterParams& params, double p_in) {
    const auto& curve = params.efficiency_curve;
    if (curve.empty()) {
        return params.efficiency;
    }
    if (p_in <= curve.front().first) {
        return curve.front().second;
    }
    if (p_in >= curve.back().first) {
        return curve.back().second;
    }
    for (std::size_t i = 1; i < curve.size(); ++i) {
        if (p_in <= curve[i].first) {
            const auto& [p0, e0] = curve[i - 1];
            const auto& [p1, e1] = curve[i];
            return e0 + (e1 - e0) * (p_in - p0) / (p1 - p0);
        }
    }
    return curve.back().second;
}

double transfer(const ConverterParams& params, double p_in) {
    if (p_in < 0.0) {
        throw std::invalid_argument("converter: input power must be non-negative");
    }
    const double passed = std::min(p_in, params.p_rated);
    return passed * efficiency_at(params, passed);
}

PnoState initial_pno_state(double step_size) {
    PnoState state;
    state.p_ref = 0.0;
    state.step_size = step_size;
    state.last_delta = step_size;
    state.last_objective = std::numeric_limits<double>::infinity();
    return state;
}

PnoState pno_update(const ConverterParams& params, const PnoState& state,
                    double p_measured, double p_target) {
    if (p_measured < 0.0 || p_target < 0.0) {
        throw std::invalid_argument("pno_update: powers must be non-negative");
    }
    const double objective = std::abs(p_target - p_measured);
    PnoState next = state;
    const double upper = std::min(p_target, params.p_rated);
    if (objective <= state.step_size / 2.0) {
        // Deadband: hold the reference, still honoring a lowered clamp so a
        // stale reference can never outrun a shrunken target.
        next.p_ref = std::min(state.p_ref, upper);
        next.last_objective = objective;
        return next;
    }
    // Ties keep the previous direction; a worse objective reverses it.
    const bool improved = objective < state.last_objective;
    const bool worsened = objective > state.last_objective;
    const double direction = worsened ? -std::copysign(1.0, state.last_delta)
                                      : std::copysign(1.0, state.last_delta);
    const double delta = direction * state.step_size;
    next.p_ref = std::clamp(state.p_ref + delta, 0.0, upper);
    next.last_delta = delta;
    next.last_objective = objective;
    if (next.p_ref == state.p_ref && !improved) {
        // The clamp absorbed the whole perturbation without progress; aim the
        // other way so the reference cannot wedge against a bound.
        next.last_delta = -delta;
    }
    return next;
}

std::pair<double, PnoState> boost_dispatch(const ConverterParams& params,
                                           const PnoState& state,
                                           double p_grid_demand, double p_available) {
    if (p_grid_demand < 0.0 || p_available < 0.0) {
        throw std::invalid_argument("boost_dispatch: inputs must be non-negative");
    }
    const double eta = efficiency_at(params, std::min(state.p_ref, params.p_rated));
    const double device_target = std::min(p_grid_demand / eta, p_available);
    const PnoState next = pno_update(params, state, state.p_ref, device_target);
    return {next.p_ref, next};
}

} // namespace hessim

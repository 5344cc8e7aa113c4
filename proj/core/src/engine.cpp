/*
 * Copyright (c) The hessim project contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include "hessim/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "hessim/errors.hpp"

namespace hessim {

namespace {

// Signal layout; every step appends one value per entry.
enum SignalIndex : std::size_t {
    SIG_P_RENEWABLE = 0,
    SIG_P_LOAD,
    SIG_SURPLUS,
    SIG_MODE,
    SIG_P_EL_REF,
    SIG_P_EL_BUS_DRAW,
    SIG_P_ELECTROLYZER,
    SIG_H2_RATE,
    SIG_P_FC_REF,
    SIG_P_FC_BOOST_REF,
    SIG_P_FUEL_CELL,
    SIG_P_FC_BUS,
    SIG_FC_CURRENT,
    SIG_FC_VOLTAGE,
    SIG_FC_FLOW,
    SIG_FC_UTILIZATION,
    SIG_FC_STARVED,
    SIG_P_BATTERY_REF,
    SIG_P_BATTERY_BUS,
    SIG_BATTERY_SOC,
    SIG_TANK_MOLES,
    SIG_TANK_PRESSURE,
    SIG_LOAD_SHED,
    SIG_BUS_RESIDUAL,
    SIG_OVERPRESSURE,
    SIG_COUNT,
};

std::vector<Signal> make_signals() {
    return {
        {"p_renewable", "W", {}},
        {"p_load", "W", {}},
        {"surplus", "W", {}},
        {"mode", "", {}}, // -1 deficit, 0 balanced, +1 surplus
        {"p_electrolyzer_ref", "W", {}},
        {"p_el_bus_draw", "W", {}},
        {"p_electrolyzer", "W", {}},
        {"h2_production_rate", "mol/s", {}},
        {"p_fuelcell_ref", "W", {}},
        {"p_fc_boost_ref", "W", {}},
        {"p_fuel_cell", "W", {}},
        {"p_fc_bus", "W", {}},
        {"fc_current", "A", {}},
        {"fc_voltage", "V", {}},
        {"fc_flow", "mol/s", {}},
        {"fc_utilization", "1", {}},
        {"fc_starved", "", {}},
        {"p_battery_ref", "W", {}},
        {"p_battery_bus", "W", {}},
        {"battery_soc", "1", {}},
        {"tank_moles", "mol", {}},
        {"tank_pressure", "Pa", {}},
        {"load_shed", "W", {}},
        {"bus_residual", "W", {}},
        {"overpressure", "", {}},
    };
}

long long step_count(const Scenario& s) {
    return std::llround(s.duration / s.dt);
}

} // namespace

void validate(const Scenario& scenario) {
    if (!(scenario.dt > 0.0)) {
        throw std::invalid_argument("engine.dt must be > 0");
    }
    if (scenario.duration < scenario.dt) {
        throw std::invalid_argument("engine.duration must be >= dt");
    }
    if (!(scenario.v_bus > 0.0)) {
        throw std::invalid_argument("grid.v_bus must be > 0");
    }
    if (scenario.renewable.empty() || scenario.load.empty()) {
        throw std::invalid_argument("profiles must contain at least one sample");
    }
    if (scenario.renewable.front().t > 0.0 || scenario.load.front().t > 0.0) {
        throw std::invalid_argument("profiles must cover t = 0 (first sample at t_s = 0)");
    }
    if (!(scenario.el_pno_step > 0.0) || !(scenario.fc_pno_step > 0.0)) {
        throw std::invalid_argument("P&O step sizes must be > 0");
    }
    if (scenario.battery_enabled &&
        (scenario.battery_soc_initial < scenario.battery.soc_min ||
         scenario.battery_soc_initial > scenario.battery.soc_max)) {
        throw std::invalid_argument("battery.soc_initial must lie within [soc_min, soc_max]");
    }
    validate(scenario.electrolyzer);
    validate(scenario.electrolyzer_converter);
    validate(scenario.tank);
    if (pressure_of(scenario.tank, scenario.tank.n_initial) > scenario.tank.p_max) {
        throw std::invalid_argument("tank.n_initial already exceeds tank.p_max");
    }
    validate(scenario.fuel_cell);
    validate(scenario.fc_converter);
    validate(scenario.battery);
    validate(scenario.battery_converter);
    validate(scenario.ems);
}

const Signal* SimResult::find(const std::string& name) const {
    for (const auto& s : signals) {
        if (s.name == name) {
            return &s;
        }
    }
    return nullptr;
}

const std::vector<double>& SimResult::values(const std::string& name) const {
    const Signal* s = find(name);
    if (s == nullptr) {
        throw std::out_of_range("SimResult: no signal named '" + name + "'");
    }
    return s->values;
}

TimeSeries SimResult::as_time_series(const std::string& name) const {
    const Signal* s = find(name);
    if (s == nullptr) {
        throw std::out_of_range("SimResult: no signal named '" + name + "'");
    }
    TimeSeries series(s->name, s->unit);
    series.reserve(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        series.push(t[i], s->values[i]);
    }
    return series;
}

SimResult run(const Scenario& scenario) {
    validate(scenario);

    const long long n_steps = step_count(scenario);
    const double dt = scenario.dt;

    SimResult result;
    result.scenario_name = scenario.name;
    result.dt = dt;
    result.t.reserve(static_cast<std::size_t>(n_steps));
    result.signals = make_signals();
    for (auto& s : result.signals) {
        s.values.reserve(static_cast<std::size_t>(n_steps));
    }

    DispatchContext ctx;
    ctx.ems = scenario.ems;
    ctx.battery_enabled = scenario.battery_enabled;
    ctx.fuel_cell = scenario.fuel_cell;
    ctx.fc_converter = scenario.fc_converter;
    ctx.battery = scenario.battery;
    ctx.battery_converter = scenario.battery_converter;
    ctx.dt = dt;

    ZohCursor renewable(scenario.renewable);
    ZohCursor load(scenario.load);

    SplitFilterState filter{0.0, scenario.ems.tau};
    PnoState el_pno = initial_pno_state(scenario.el_pno_step);
    PnoState fc_pno = initial_pno_state(scenario.fc_pno_step);
    FlowRegulatorState regulator;
    TankState tank = initial_tank_state(scenario.tank);
    BatteryState battery{scenario.battery_soc_initial};

    double p_el_delivered_prev = 0.0;
    double carryover = 0.0;

    auto record = [&result](SignalIndex idx, double v) {
        result.signals[idx].values.push_back(v);
    };

    for (long long k = 0; k < n_steps; ++k) {
        const double t = static_cast<double>(k) * dt;
        const double p_ren = renewable.value_at(t);
        const double p_load = load.value_at(t);
        GridState grid{p_ren, p_load, p_ren - p_load, scenario.v_bus};

        // Supervisory dispatch.
        DispatchStep d = dispatch(grid, filter, tank, battery, ctx, carryover);
        filter = d.filter;

        // Electrolyzer path: P&O on the bus draw, step-down transfer, stack.
        el_pno = pno_update(scenario.electrolyzer_converter, el_pno,
                            p_el_delivered_prev, d.command.p_electrolyzer_ref);
        const double el_bus_draw = el_pno.p_ref;
        const double p_el_in = transfer(scenario.electrolyzer_converter, el_bus_draw);
        ElectrolyzerOutput el = electrolyzer_step(scenario.electrolyzer, p_el_in);

        // Fuel-cell path: boost P&O capped by what the tank can feed.
        const double avail_flow = available_outflow(tank, dt);
        const double p_dev_avail = max_power_for_flow(scenario.fuel_cell, avail_flow);
        auto [fc_draw, fc_pno_next] =
            boost_dispatch(scenario.fc_converter, fc_pno, d.command.p_fuelcell_ref, p_dev_avail);
        fc_pno = fc_pno_next;
        FuelCellStepResult fc = fuel_cell_step(scenario.fuel_cell, regulator, fc_draw, avail_flow);
        regulator = fc.regulator;
        const double p_fc_bus = transfer(scenario.fc_converter, fc.state.p_out);

        // Battery path (through its converter; positive command discharges).
        double p_batt_bus = 0.0;
        if (scenario.battery_enabled) {
            const double b_ref = d.command.p_battery_ref;
            if (b_ref >= 0.0) {
                const double device_charge = transfer(scenario.battery_converter, b_ref);
                auto [next, p_actual] = battery_step(scenario.battery, battery, -device_charge, dt);
                battery = next;
                const double eta = efficiency_at(scenario.battery_converter, device_charge);
                p_batt_bus = p_actual / eta; // p_actual <= 0: bus-side draw
            } else {
                const double eta = efficiency_at(scenario.battery_converter, -b_ref);
                const double device_request =
                    std::min(-b_ref / eta, scenario.battery_converter.p_rated);
                auto [next, p_actual] = battery_step(scenario.battery, battery, device_request, dt);
                battery = next;
                p_batt_bus = transfer(scenario.battery_converter, p_actual);
            }
            carryover = d.battery_ref_unclamped + p_batt_bus;
        } else {
            carryover = 0.0;
        }

        // Tank integration; overpressure curtails this step's production.
        double overpressure_flag = 0.0;
        double h2_in = el.h2_rate;
        TankStepResult tank_next;
        try {
            tank_next = tank_step(scenario.tank, tank, h2_in, fc.state.n_dot_h2_supplied, dt);
        } catch (const OverpressureError&) {
            overpressure_flag = 1.0;
            el = ElectrolyzerOutput{}; // curtailed: zero draw, zero production
            h2_in = 0.0;
            tank_next = tank_step(scenario.tank, tank, 0.0, fc.state.n_dot_h2_supplied, dt);
        }

        const double residual =
            grid.surplus + p_fc_bus + p_batt_bus - (overpressure_flag > 0.0 ? 0.0 : el_bus_draw);
        const double shed = std::max(0.0, -residual);

        result.t.push_back(t);
        record(SIG_P_RENEWABLE, p_ren);
        record(SIG_P_LOAD, p_load);
        record(SIG_SURPLUS, grid.surplus);
        record(SIG_MODE, static_cast<double>(static_cast<int>(d.command.mode)));
        record(SIG_P_EL_REF, d.command.p_electrolyzer_ref);
        record(SIG_P_EL_BUS_DRAW, overpressure_flag > 0.0 ? 0.0 : el_bus_draw);
        record(SIG_P_ELECTROLYZER, el.power_consumed);
        record(SIG_H2_RATE, h2_in);
        record(SIG_P_FC_REF, d.command.p_fuelcell_ref);
        record(SIG_P_FC_BOOST_REF, fc_draw);
        record(SIG_P_FUEL_CELL, fc.state.p_out);
        record(SIG_P_FC_BUS, p_fc_bus);
        record(SIG_FC_CURRENT, fc.state.current);
        record(SIG_FC_VOLTAGE, fc.state.voltage);
        record(SIG_FC_FLOW, fc.state.n_dot_h2_supplied);
        record(SIG_FC_UTILIZATION, fc.state.utilization);
        record(SIG_FC_STARVED, fc.state.starved ? 1.0 : 0.0);
        record(SIG_P_BATTERY_REF, d.command.p_battery_ref);
        record(SIG_P_BATTERY_BUS, p_batt_bus);
        record(SIG_BATTERY_SOC, battery.soc);
        record(SIG_TANK_MOLES, tank.n_h2);
        record(SIG_TANK_PRESSURE, tank.pressure);
        record(SIG_LOAD_SHED, shed);
        record(SIG_BUS_RESIDUAL, residual);
        record(SIG_OVERPRESSURE, overpressure_flag);

        tank = tank_next.state;
        p_el_delivered_prev = el.power_consumed;
    }

    result.final_tank_moles = tank.n_h2;
    result.final_tank_pressure = tank.pressure;
    result.final_battery_soc = battery.soc;
    result.audit = audit(result, scenario);
    return result;
}

AuditReport audit(const SimResult& result, const Scenario& scenario) {
    AuditReport report;
    const auto& h2_in = result.values("h2_production_rate");
    const auto& h2_out = result.values("fc_flow");
    const auto& moles = result.values("tank_moles");
    const auto& residual = result.values("bus_residual");
    const auto& utilization = result.values("fc_utilization");
    const auto& starved = result.values("fc_starved");
    const auto& overpressure = result.values("overpressure");

    // Independent accumulator replaying the logged flows (same recurrence the
    // tank uses, so a clean run must match bit for bit).
    double n_replay = scenario.tank.n_initial;
    double worst = 0.0;
    for (std::size_t k = 0; k < result.t.size(); ++k) {
        worst = std::max(worst, std::abs(moles[k] - n_replay));
        n_replay = std::max(0.0, n_replay + (h2_in[k] - h2_out[k]) * scenario.dt);
    }
    worst = std::max(worst, std::abs(result.final_tank_moles - n_replay));
    report.mole_balance_error = worst;

    for (std::size_t k = 0; k < result.t.size(); ++k) {
        report.bus_energy_residual += std::abs(residual[k]) * scenario.dt;
        report.max_utilization = std::max(report.max_utilization, utilization[k]);
        if (starved[k] != 0.0) {
            ++report.starvation_steps;
        }
        if (overpressure[k] != 0.0) {
            ++report.overpressure_steps;
        }
    }
    return report;
}

std::vector<SweepOutcome> sweep(const std::vector<Scenario>& scenarios, int parallelism) {
    std::vector<SweepOutcome> outcomes(scenarios.size());
    auto run_one = [&](std::size_t i) {
        outcomes[i].name = scenarios[i].name;
        try {
            outcomes[i].result = run(scenarios[i]);
            outcomes[i].ok = true;
        } catch (const std::exception& e) {
            outcomes[i].ok = false;
            outcomes[i].error = e.what();
        }
    };
    if (parallelism <= 1 || scenarios.size() <= 1) {
        for (std::size_t i = 0; i < scenarios.size(); ++i) {
            run_one(i);
        }
        return outcomes;
    }
    std::atomic<std::size_t> next{0};
    const int workers = std::min<int>(parallelism, static_cast<int>(scenarios.size()));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next.fetch_add(1); i < scenarios.size(); i = next.fetch_add(1)) {
                run_one(i);
            }
        });
    }
    for (auto& th : pool) {
        th.join();
    }
    return outcomes;
}

} // namespace hessim

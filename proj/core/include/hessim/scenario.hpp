/*
 * Copyright (c) The hessim project contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <string>

#include "hessim/battery.hpp"
#include "hessim/converter.hpp"
#include "hessim/dispatch.hpp"
#include "hessim/electrolyzer.hpp"
#include "hessim/fuel_cell.hpp"
#include "hessim/tank.hpp"
#include "hessim/timeseries.hpp"

namespace hessim {

/// A complete, validated simulation case: component parameters plus the
/// renewable and load profiles sampled with zero-order hold.
struct Scenario {
    std::string name = "scenario";
    double dt = 0.1;        // s
    double duration = 600.0;// s
    double v_bus = 1000.0;  // V

    TimeSeries renewable{"p_renewable", "W"};
    TimeSeries load{"p_load", "W"};

    ElectrolyzerParams electrolyzer;
    ConverterParams electrolyzer_converter;
    double el_pno_step = 50.0; // W

    TankParams tank;

    FuelCellParams fuel_cell;
    ConverterParams fc_converter;
    double fc_pno_step = 50.0; // W

    bool battery_enabled = false;
    BatteryParams battery;
    ConverterParams battery_converter;
    double battery_soc_initial = 0.5;

    EmsParams ems;
};

/// Checks every invariant the engine relies on; throws std::invalid_argument
/// (or a subclass) naming what is wrong.
void validate(const Scenario& scenario);

} // namespace hessim

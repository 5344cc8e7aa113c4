/*
 * Copyright (c) The hessim project contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <filesystem>
#include <string>

#include "hessim/scenario.hpp"

namespace hessim {

struct GridConfig {
    double v_bus = 1000.0; // V
    bool operator==(const GridConfig&) const = default;
};

struct EngineConfig {
    double dt = 0.1;        // s
    double duration = 600.0;// s
    bool operator==(const EngineConfig&) const = default;
};

struct ConverterConfig {
    ConverterParams params;
    double pno_step = 50.0; // W
    bool operator==(const ConverterConfig&) const = default;
};

struct BatteryConfig {
    bool enabled = false;
    BatteryParams params;
    double soc_initial = 0.5;
    bool operator==(const BatteryConfig&) const = default;
};

/// Whole-simulator configuration with documented defaults. Unknown keys are
/// rejected at load; missing keys keep their defaults; every value is
/// validated against the owning module's invariants.
struct Config {
    int schema_version = 1;
    GridConfig grid;
    ElectrolyzerParams electrolyzer;
    // Step-down feeding the electrolyzer. The default efficiency curve pins
    // the two regulated operating points (3 kW -> 2.8 kW, 6 kW -> 5.8 kW).
    ConverterConfig electrolyzer_converter{
        {0.967,
         10000.0,
         ConverterDirection::bus_to_device,
         {{3000.0, 2800.0 / 3000.0}, {6000.0, 0.967}}},
        50.0};
    TankParams tank;
    FuelCellParams fuel_cell;
    ConverterConfig fuel_cell_converter{
        {0.96, 8000.0, ConverterDirection::device_to_bus, {}}, 50.0};
    BatteryConfig battery;
    ConverterConfig battery_converter{
        {1.0, 5000.0, ConverterDirection::device_to_bus, {}}, 50.0};
    EmsParams ems;
    EngineConfig engine;

    bool operator==(const Config&) const = default;
};

void validate(const Config& config);

/// Parses a config from JSON text; origin appears in diagnostics.
Config config_from_json(const std::string& text, const std::string& origin);

/// Serializes every effective value; reloading yields an identical Config.
std::string config_to_json(const Config& config);

Config load_config(const std::filesystem::path& path);
void save_config(const Config& config, const std::filesystem::path& path);

/// Assembles a validated Scenario from a config and the two profiles.
Scenario make_scenario(const Config& config, TimeSeries renewable, TimeSeries load,
                       std::string name);

} // namespace hessim

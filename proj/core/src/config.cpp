/*
 * Copyright (c) The hessim project contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include "hessim/config.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>

#include <json.hpp>

#include "hessim/errors.hpp"

namespace hessim {

namespace {

using nlohmann::json;

void check_keys(const json& obj, const std::string& block,
                std::initializer_list<const char*> allowed) {
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* key : allowed) {
            if (item.key() == key) {
                known = true;
                break;
            }
        }
        if (!known) {
            throw ConfigError("unknown key '" + (block.empty() ? item.key() : block + "." + item.key()) + "'");
        }
    }
}

double get_number(const json& obj, const std::string& block, const char* key, double fallback) {
    if (!obj.contains(key)) {
        return fallback;
    }
    const json& v = obj.at(key);
    if (!v.is_number()) {
        throw ConfigError("key '" + block + "." + key + "' must be a number");
    }
    return v.get<double>();
}

int get_int(const json& obj, const std::string& block, const char* key, int fallback) {
    if (!obj.contains(key)) {
        return fallback;
    }
    const json& v = obj.at(key);
    if (!v.is_number_integer()) {
        throw ConfigError("key '" + block + "." + key + "' must be an integer");
    }
    return v.get<int>();
}

bool get_bool(const json& obj, const std::string& block, const char* key, bool fallback) {
    if (!obj.contains(key)) {
        return fallback;
    }
    const json& v = obj.at(key);
    if (!v.is_boolean()) {
        throw ConfigError("key '" + block + "." + key + "' must be a boolean");
    }
    return v.get<bool>();
}

std::vector<std::pair<double, double>> get_curve(const json& obj, const std::string& block,
                                                 const char* key,
                                                 std::vector<std::pair<double, double>> fallback) {
    if (!obj.contains(key)) {
        return fallback;
    }
    const json& v = obj.at(key);
    if (!v.is_array()) {
        throw ConfigError("key '" + block + "." + key + "' must be an array of [power_w, efficiency] pairs");
    }
    std::vector<std::pair<double, double>> curve;
    for (const auto& entry : v) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number()) {
            throw ConfigError("key '" + block + "." + key + "' entries must be [power_w, efficiency] pairs");
        }
        curve.emplace_back(entry[0].get<double>(), entry[1].get<double>());
    }
    return curve;
}

json get_block(const json& root, const char* name) {
    if (!root.contains(name)) {
        return json::object();
    }
    if (!root.at(name).is_object()) {
        throw ConfigError("key '" + std::string(name) + "' must be an object");
    }
    return root.at(name);
}

void parse_converter(const json& root, const char* name, ConverterConfig& out, bool with_pno) {
    const json block = get_block(root, name);
    if (with_pno) {
        check_keys(block, name, {"efficiency", "efficiency_curve", "p_rated_w", "pno_step_w"});
        out.pno_step = get_number(block, name, "pno_step_w", out.pno_step);
    } else {
        check_keys(block, name, {"efficiency", "efficiency_curve", "p_rated_w"});
    }
    out.params.efficiency = get_number(block, name, "efficiency", out.params.efficiency);
    out.params.p_rated = get_number(block, name, "p_rated_w", out.params.p_rated);
    out.params.efficiency_curve =
        get_curve(block, name, "efficiency_curve", out.params.efficiency_curve);
}

json curve_to_json(const std::vector<std::pair<double, double>>& curve) {
    json arr = json::array();
    for (const auto& [p, eta] : curve) {
        arr.push_back(json::array({p, eta}));
    }
    return arr;
}

} // namespace

void validate(const Config& config) {
    if (config.schema_version != 1) {
        throw ConfigError("schema_version must be 1");
    }
    if (!(config.grid.v_bus > 0.0)) {
        throw ConfigError("grid.v_bus_v must be > 0");
    }
    if (!(config.engine.dt > 0.0)) {
        throw ConfigError("engine.dt_s must be > 0");
    }
    if (config.engine.duration < config.engine.dt) {
        throw ConfigError("engine.duration_s must be >= engine.dt_s");
    }
    if (!(config.electrolyzer_converter.pno_step > 0.0) ||
        !(config.fuel_cell_converter.pno_step > 0.0)) {
        throw ConfigError("converter pno_step_w must be > 0");
    }
    if (config.battery.soc_initial < config.battery.params.soc_min ||
        config.battery.soc_initial > config.battery.params.soc_max) {
        throw ConfigError("battery.soc_initial must lie within [soc_min, soc_max]");
    }
    try {
        validate(config.electrolyzer);
        validate(config.electrolyzer_converter.params);
        validate(config.tank);
        if (pressure_of(config.tank, config.tank.n_initial) > config.tank.p_max) {
            throw std::invalid_argument("tank.n_initial_mol already exceeds tank.p_max_pa");
        }
        validate(config.fuel_cell);
        validate(config.fuel_cell_converter.params);
        validate(config.battery.params);
        validate(config.battery_converter.params);
        validate(config.ems);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
}

Config config_from_json(const std::string& text, const std::string& origin) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(origin + ": " + e.what());
    }
    if (!root.is_object()) {
        throw ConfigError(origin + ": config root must be an object");
    }
    check_keys(root, "",
               {"schema_version", "grid", "electrolyzer", "electrolyzer_converter", "tank",
                "fuel_cell", "fuel_cell_converter", "battery", "battery_converter", "ems",
                "engine"});

    Config cfg;
    try {
        cfg.schema_version = get_int(root, "", "schema_version", cfg.schema_version);

        const json grid = get_block(root, "grid");
        check_keys(grid, "grid", {"v_bus_v"});
        cfg.grid.v_bus = get_number(grid, "grid", "v_bus_v", cfg.grid.v_bus);

        const json el = get_block(root, "electrolyzer");
        check_keys(el, "electrolyzer",
                   {"n_cell", "eta_faraday", "v_reversible_v", "r_ohmic_cell_ohm", "i_max_a",
                    "temperature_k"});
        cfg.electrolyzer.n_cell = get_int(el, "electrolyzer", "n_cell", cfg.electrolyzer.n_cell);
        cfg.electrolyzer.eta_faraday =
            get_number(el, "electrolyzer", "eta_faraday", cfg.electrolyzer.eta_faraday);
        cfg.electrolyzer.v_reversible =
            get_number(el, "electrolyzer", "v_reversible_v", cfg.electrolyzer.v_reversible);
        cfg.electrolyzer.r_ohmic_cell =
            get_number(el, "electrolyzer", "r_ohmic_cell_ohm", cfg.electrolyzer.r_ohmic_cell);
        cfg.electrolyzer.i_max = get_number(el, "electrolyzer", "i_max_a", cfg.electrolyzer.i_max);
        cfg.electrolyzer.temperature =
            get_number(el, "electrolyzer", "temperature_k", cfg.electrolyzer.temperature);

        parse_converter(root, "electrolyzer_converter", cfg.electrolyzer_converter, true);
        cfg.electrolyzer_converter.params.direction = ConverterDirection::bus_to_device;

        const json tank = get_block(root, "tank");
        check_keys(tank, "tank",
                   {"volume_m3", "temperature_k", "p_initial_pa", "p_max_pa", "n_initial_mol"});
        cfg.tank.volume = get_number(tank, "tank", "volume_m3", cfg.tank.volume);
        cfg.tank.temperature = get_number(tank, "tank", "temperature_k", cfg.tank.temperature);
        cfg.tank.p_initial = get_number(tank, "tank", "p_initial_pa", cfg.tank.p_initial);
        cfg.tank.p_max = get_number(tank, "tank", "p_max_pa", cfg.tank.p_max);
        cfg.tank.n_initial = get_number(tank, "tank", "n_initial_mol", cfg.tank.n_initial);

        const json fc = get_block(root, "fuel_cell");
        check_keys(fc, "fuel_cell",
                   {"n_cells", "e_oc_cell_v", "tafel_slope_v", "i_exchange_a", "r_ohm_stack_ohm",
                    "p_nominal_w", "i_max_a", "u_target"});
        cfg.fuel_cell.n_cells = get_int(fc, "fuel_cell", "n_cells", cfg.fuel_cell.n_cells);
        cfg.fuel_cell.e_oc_cell = get_number(fc, "fuel_cell", "e_oc_cell_v", cfg.fuel_cell.e_oc_cell);
        cfg.fuel_cell.tafel_slope =
            get_number(fc, "fuel_cell", "tafel_slope_v", cfg.fuel_cell.tafel_slope);
        cfg.fuel_cell.i_exchange =
            get_number(fc, "fuel_cell", "i_exchange_a", cfg.fuel_cell.i_exchange);
        cfg.fuel_cell.r_ohm_stack =
            get_number(fc, "fuel_cell", "r_ohm_stack_ohm", cfg.fuel_cell.r_ohm_stack);
        cfg.fuel_cell.p_nominal = get_number(fc, "fuel_cell", "p_nominal_w", cfg.fuel_cell.p_nominal);
        cfg.fuel_cell.i_max = get_number(fc, "fuel_cell", "i_max_a", cfg.fuel_cell.i_max);
        cfg.fuel_cell.u_target = get_number(fc, "fuel_cell", "u_target", cfg.fuel_cell.u_target);

        parse_converter(root, "fuel_cell_converter", cfg.fuel_cell_converter, true);
        cfg.fuel_cell_converter.params.direction = ConverterDirection::device_to_bus;

        const json batt = get_block(root, "battery");
        check_keys(batt, "battery",
                   {"enabled", "capacity_j", "soc_min", "soc_max", "soc_initial", "p_charge_max_w",
                    "p_discharge_max_w", "eta_charge", "eta_discharge", "self_discharge_per_s"});
        cfg.battery.enabled = get_bool(batt, "battery", "enabled", cfg.battery.enabled);
        cfg.battery.params.capacity =
            get_number(batt, "battery", "capacity_j", cfg.battery.params.capacity);
        cfg.battery.params.soc_min = get_number(batt, "battery", "soc_min", cfg.battery.params.soc_min);
        cfg.battery.params.soc_max = get_number(batt, "battery", "soc_max", cfg.battery.params.soc_max);
        cfg.battery.soc_initial = get_number(batt, "battery", "soc_initial", cfg.battery.soc_initial);
        cfg.battery.params.p_charge_max =
            get_number(batt, "battery", "p_charge_max_w", cfg.battery.params.p_charge_max);
        cfg.battery.params.p_discharge_max =
            get_number(batt, "battery", "p_discharge_max_w", cfg.battery.params.p_discharge_max);
        cfg.battery.params.eta_charge =
            get_number(batt, "battery", "eta_charge", cfg.battery.params.eta_charge);
        cfg.battery.params.eta_discharge =
            get_number(batt, "battery", "eta_discharge", cfg.battery.params.eta_discharge);
        cfg.battery.params.self_discharge_rate =
            get_number(batt, "battery", "self_discharge_per_s", cfg.battery.params.self_discharge_rate);

        parse_converter(root, "battery_converter", cfg.battery_converter, false);
        cfg.battery_converter.params.direction = ConverterDirection::device_to_bus;

        const json ems = get_block(root, "ems");
        check_keys(ems, "ems", {"deadband_w", "tau_s"});
        cfg.ems.deadband = get_number(ems, "ems", "deadband_w", cfg.ems.deadband);
        cfg.ems.tau = get_number(ems, "ems", "tau_s", cfg.ems.tau);

        const json engine = get_block(root, "engine");
        check_keys(engine, "engine", {"dt_s", "duration_s"});
        cfg.engine.dt = get_number(engine, "engine", "dt_s", cfg.engine.dt);
        cfg.engine.duration = get_number(engine, "engine", "duration_s", cfg.engine.duration);
    } catch (const ConfigError& e) {
        throw ConfigError(origin + ": " + e.what());
    }

    try {
        validate(cfg);
    } catch (const ConfigError& e) {
        throw ConfigError(origin + ": " + e.what());
    }
    return cfg;
}

std::string config_to_json(const Config& config) {
    json root;
    root["schema_version"] = config.schema_version;
    root["grid"] = {{"v_bus_v", config.grid.v_bus}};
    root["electrolyzer"] = {
        {"n_cell", config.electrolyzer.n_cell},
        {"eta_faraday", config.electrolyzer.eta_faraday},
        {"v_reversible_v", config.electrolyzer.v_reversible},
        {"r_ohmic_cell_ohm", config.electrolyzer.r_ohmic_cell},
        {"i_max_a", config.electrolyzer.i_max},
        {"temperature_k", config.electrolyzer.temperature},
    };
    root["electrolyzer_converter"] = {
        {"efficiency", config.electrolyzer_converter.params.efficiency},
        {"efficiency_curve", curve_to_json(config.electrolyzer_converter.params.efficiency_curve)},
        {"p_rated_w", config.electrolyzer_converter.params.p_rated},
        {"pno_step_w", config.electrolyzer_converter.pno_step},
    };
    root["tank"] = {
        {"volume_m3", config.tank.volume},
        {"temperature_k", config.tank.temperature},
        {"p_initial_pa", config.tank.p_initial},
        {"p_max_pa", config.tank.p_max},
        {"n_initial_mol", config.tank.n_initial},
    };
    root["fuel_cell"] = {
        {"n_cells", config.fuel_cell.n_cells},
        {"e_oc_cell_v", config.fuel_cell.e_oc_cell},
        {"tafel_slope_v", config.fuel_cell.tafel_slope},
        {"i_exchange_a", config.fuel_cell.i_exchange},
        {"r_ohm_stack_ohm", config.fuel_cell.r_ohm_stack},
        {"p_nominal_w", config.fuel_cell.p_nominal},
        {"i_max_a", config.fuel_cell.i_max},
        {"u_target", config.fuel_cell.u_target},
    };
    root["fuel_cell_converter"] = {
        {"efficiency", config.fuel_cell_converter.params.efficiency},
        {"efficiency_curve", curve_to_json(config.fuel_cell_converter.params.efficiency_curve)},
        {"p_rated_w", config.fuel_cell_converter.params.p_rated},
        {"pno_step_w", config.fuel_cell_converter.pno_step},
    };
    root["battery"] = {
        {"enabled", config.battery.enabled},
        {"capacity_j", config.battery.params.capacity},
        {"soc_min", config.battery.params.soc_min},
        {"soc_max", config.battery.params.soc_max},
        {"soc_initial", config.battery.soc_initial},
        {"p_charge_max_w", config.battery.params.p_charge_max},
        {"p_discharge_max_w", config.battery.params.p_discharge_max},
        {"eta_charge", config.battery.params.eta_charge},
        {"eta_discharge", config.battery.params.eta_discharge},
        {"self_discharge_per_s", config.battery.params.self_discharge_rate},
    };
    root["battery_converter"] = {
        {"efficiency", config.battery_converter.params.efficiency},
        {"efficiency_curve", curve_to_json(config.battery_converter.params.efficiency_curve)},
        {"p_rated_w", config.battery_converter.params.p_rated},
    };
    root["ems"] = {
        {"deadband_w", config.ems.deadband},
        {"tau_s", config.ems.tau},
    };
    root["engine"] = {
        {"dt_s", config.engine.dt},
        {"duration_s", config.engine.duration},
    };
    return root.dump(2) + "\n";
}

Config load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return config_from_json(buffer.str(), path.string());
}

void save_config(const Config& config, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ConfigError("cannot write config file '" + path.string() + "'");
    }
    out << config_to_json(config);
}

Scenario make_scenario(const Config& config, TimeSeries renewable, TimeSeries load,
                       std::string name) {
    Scenario s;
    s.name = std::move(name);
    s.dt = config.engine.dt;
    s.duration = config.engine.duration;
    s.v_bus = config.grid.v_bus;
    s.renewable = std::move(renewable);
    s.load = std::move(load);
    s.electrolyzer = config.electrolyzer;
    s.electrolyzer_converter = config.electrolyzer_converter.params;
    s.el_pno_step = config.electrolyzer_converter.pno_step;
    s.tank = config.tank;
    s.fuel_cell = config.fuel_cell;
    s.fc_converter = config.fuel_cell_converter.params;
    s.fc_pno_step = config.fuel_cell_converter.pno_step;
    s.battery_enabled = config.battery.enabled;
    s.battery = config.battery.params;
    s.battery_converter = config.battery_converter.params;
    s.battery_soc_initial = config.battery.soc_initial;
    s.ems = config.ems;
    validate(s);
    return s;
}

} // namespace hessim

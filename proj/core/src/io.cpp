/*
 * Copyright (c) The hessim project contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include "hessim/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hessim/errors.hpp"

namespace hessim {

namespace {

constexpr const char* kProfileHeader = "t_s,p_renewable_w,p_load_w";

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) {
        return "";
    }
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_field(const std::string& field, const std::string& origin, std::size_t row,
                   const char* what) {
    const std::string text = trim(field);
    if (text.empty()) {
        throw ProfileError(origin + ":" + std::to_string(row) + ": empty " + what + " field");
    }
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end == nullptr || *end != '\0' || !std::isfinite(v)) {
        throw ProfileError(origin + ":" + std::to_string(row) + ": malformed " + what +
                           " value '" + text + "'");
    }
    return v;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string current;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    fields.push_back(current);
    return fields;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot write '" + path.string() + "'");
    }
    out << text;
    if (!out) {
        throw std::runtime_error("error while writing '" + path.string() + "'");
    }
}

std::string sanitize_unit(const std::string& unit) {
    std::string out;
    for (char c : unit) {
        if (std::isalnum(static_cast<unsigned char>(c))) {
            out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
        } else if (!out.empty() && out.back() != '_') {
            out.push_back('_');
        }
    }
    while (!out.empty() && out.back() == '_') {
        out.pop_back();
    }
    return out;
}

std::string column_name(const Signal& signal) {
    const std::string unit = sanitize_unit(signal.unit);
    if (unit.empty() || unit == "1") {
        return signal.name;
    }
    return signal.name + "_" + unit;
}

} // namespace

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

Profile parse_profile_csv(const std::string& text, const std::string& origin) {
    std::istringstream in(text);
    std::string line;
    std::size_t row = 0;
    Profile profile;
    if (!std::getline(in, line)) {
        throw ProfileError(origin + ": empty profile file");
    }
    ++row;
    if (trim(line) != kProfileHeader) {
        throw ProfileError(origin + ":1: header must be '" + std::string(kProfileHeader) + "'");
    }
    double prev_t = -1.0;
    while (std::getline(in, line)) {
        ++row;
        if (trim(line).empty()) {
            continue;
        }
        const auto fields = split_csv(line);
        if (fields.size() != 3) {
            throw ProfileError(origin + ":" + std::to_string(row) + ": expected 3 fields, got " +
                               std::to_string(fields.size()));
        }
        const double t = parse_field(fields[0], origin, row, "t_s");
        const double ren = parse_field(fields[1], origin, row, "p_renewable_w");
        const double load = parse_field(fields[2], origin, row, "p_load_w");
        if (t < 0.0) {
            throw ProfileError(origin + ":" + std::to_string(row) + ": t_s must be non-negative");
        }
        if (t <= prev_t) {
            throw ProfileError(origin + ":" + std::to_string(row) +
                               ": t_s must be strictly increasing");
        }
        if (ren < 0.0 || load < 0.0) {
            throw ProfileError(origin + ":" + std::to_string(row) +
                               ": power values must be non-negative");
        }
        profile.renewable.push(t, ren);
        profile.load.push(t, load);
        prev_t = t;
    }
    if (profile.renewable.empty()) {
        throw ProfileError(origin + ": profile has no data rows");
    }
    return profile;
}

Profile load_profile(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw ProfileError("cannot open profile file '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_profile_csv(buffer.str(), path.string());
}

Scenario load_scenario(const std::optional<std::filesystem::path>& config_path,
                       const std::filesystem::path& profile_path) {
    const Config config = config_path ? load_config(*config_path) : Config{};
    if (!config_path) {
        validate(config);
    }
    Profile profile = load_profile(profile_path);
    return make_scenario(config, std::move(profile.renewable), std::move(profile.load),
                         profile_path.stem().string());
}

void export_result(const SimResult& result, const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);

    std::string csv = "t_s";
    for (const auto& signal : result.signals) {
        csv += ",";
        csv += column_name(signal);
    }
    csv += "\n";
    for (std::size_t k = 0; k < result.t.size(); ++k) {
        csv += format_double(result.t[k]);
        for (const auto& signal : result.signals) {
            csv += ",";
            csv += format_double(signal.values[k]);
        }
        csv += "\n";
    }
    write_text(out_dir / "timeseries.csv", csv);

    nlohmann::json audit;
    audit["scenario"] = result.scenario_name;
    audit["mole_balance_error_mol"] = result.audit.mole_balance_error;
    audit["bus_energy_residual_j"] = result.audit.bus_energy_residual;
    audit["max_utilization"] = result.audit.max_utilization;
    audit["starvation_steps"] = result.audit.starvation_steps;
    audit["overpressure_steps"] = result.audit.overpressure_steps;
    audit["final_tank_moles_mol"] = result.final_tank_moles;
    audit["final_tank_pressure_pa"] = result.final_tank_pressure;
    audit["final_battery_soc"] = result.final_battery_soc;
    write_text(out_dir / "audit.json", audit.dump(2) + "\n");

    const auto& surplus = result.values("surplus");
    const auto& p_el = result.values("p_electrolyzer");
    const auto& moles = result.values("tank_moles");

    // Two-column plot extracts, one row per step (t = row index * dt).
    std::string fig5 = "surplus_w,p_electrolyzer_w\n";
    std::string fig6 = "surplus_w,tank_moles_mol\n";
    for (std::size_t k = 0; k < result.t.size(); ++k) {
        fig5 += format_double(surplus[k]) + "," + format_double(p_el[k]) + "\n";
        fig6 += format_double(surplus[k]) + "," + format_double(moles[k]) + "\n";
    }
    write_text(out_dir / "fig5.csv", fig5);
    write_text(out_dir / "fig6.csv", fig6);
}

ResultTable read_result_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open '" + path.string() + "'");
    }
    ResultTable table;
    std::string line;
    if (!std::getline(in, line)) {
        throw std::runtime_error(path.string() + ": empty result file");
    }
    table.header = split_csv(trim(line));
    if (table.header.empty() || table.header[0] != "t_s") {
        throw std::runtime_error(path.string() + ": first column must be t_s");
    }
    table.columns.resize(table.header.size() - 1);
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (trim(line).empty()) {
            continue;
        }
        const auto fields = split_csv(line);
        if (fields.size() != table.header.size()) {
            throw std::runtime_error(path.string() + ":" + std::to_string(row) +
                                     ": wrong field count");
        }
        table.t.push_back(parse_field(fields[0], path.string(), row, "t_s"));
        for (std::size_t c = 1; c < fields.size(); ++c) {
            table.columns[c - 1].push_back(
                parse_field(fields[c], path.string(), row, table.header[c].c_str()));
        }
    }
    return table;
}

std::string fig5_profile_csv() {
    // Surplus 6 kW for 300 s, then 3 kW for 300 s.
    return "t_s,p_renewable_w,p_load_w\n"
           "0,6000,0\n"
           "300,3000,0\n";
}

std::string fig6_profile_csv() {
    // Surplus 4 kW, balanced, then a 3 kW demand; 200 s each.
    return "t_s,p_renewable_w,p_load_w\n"
           "0,4000,0\n"
           "200,0,0\n"
           "400,0,3000\n";
}

std::filesystem::path emit_bundled_profile(const std::string& which,
                                           const std::filesystem::path& out_dir) {
    std::filesystem::create_directories(out_dir);
    std::filesystem::path path;
    if (which == "fig5") {
        path = out_dir / "fig5_profile.csv";
        write_text(path, fig5_profile_csv());
    } else if (which == "fig6") {
        path = out_dir / "fig6_profile.csv";
        write_text(path, fig6_profile_csv());
    } else {
        throw std::invalid_argument("unknown bundled profile '" + which +
                                    "' (expected fig5 or fig6)");
    }
    return path;
}

} // namespace hessim

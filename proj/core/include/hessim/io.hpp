/*
 * Copyright (c) The hessim project contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "hessim/config.hpp"
#include "hessim/engine.hpp"
#include "hessim/scenario.hpp"

namespace hessim {

/// Renewable and load traces sharing timestamps, parsed from a profile CSV
/// with header `t_s,p_renewable_w,p_load_w`.
struct Profile {
    TimeSeries renewable{"p_renewable", "W"};
    TimeSeries load{"p_load", "W"};
};

/// Parses profile CSV text; origin appears in row-level diagnostics.
Profile parse_profile_csv(const std::string& text, const std::string& origin);

Profile load_profile(const std::filesystem::path& path);

/// Loads config (defaults when absent) and profile, assembles and validates
/// the Scenario. The scenario name is the profile filename stem.
Scenario load_scenario(const std::optional<std::filesystem::path>& config_path,
                       const std::filesystem::path& profile_path);

/// Writes timeseries.csv, audit.json, fig5.csv (surplus vs electrolyzer
/// power) and fig6.csv (surplus vs tank moles) into out_dir. Deterministic:
/// re-exporting the same result yields byte-identical files.
void export_result(const SimResult& result, const std::filesystem::path& out_dir);

/// Reads back a timeseries.csv produced by export_result.
struct ResultTable {
    std::vector<std::string> header;
    std::vector<double> t;
    std::vector<std::vector<double>> columns; // one per non-time header entry
};
ResultTable read_result_csv(const std::filesystem::path& path);

/// Bundled reconstruction profiles (rectangular surplus traces).
std::string fig5_profile_csv();
std::string fig6_profile_csv();

/// Writes the named bundled profile ("fig5" or "fig6") into out_dir and
/// returns the file path.
std::filesystem::path emit_bundled_profile(const std::string& which,
                                           const std::filesystem::path& out_dir);

/// Formats a double with 17 significant digits (bit-exact round trip).
std::string format_double(double v);

} // namespace hessim

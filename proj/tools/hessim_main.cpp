/*
 * Copyright (c) The hessim project contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include <algorithm>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hessim/config.hpp"
#include "hessim/engine.hpp"
#include "hessim/io.hpp"

namespace fs = std::filesystem;

namespace {

hessim::Config effective_config(const std::optional<fs::path>& config_path) {
    if (config_path) {
        return hessim::load_config(*config_path);
    }
    hessim::Config cfg;
    hessim::validate(cfg);
    return cfg;
}

int cmd_run(const std::optional<fs::path>& config_path, const fs::path& profile_path,
            const fs::path& out_dir) {
    const hessim::Scenario scenario = hessim::load_scenario(config_path, profile_path);
    const hessim::SimResult result = hessim::run(scenario);
    hessim::export_result(result, out_dir);
    hessim::save_config(effective_config(config_path), out_dir / "effective_config.json");
    std::cout << "ran '" << scenario.name << "' (" << result.t.size() << " steps), results in "
              << out_dir.string() << "\n";
    std::cout << "audit: mole_balance_error=" << result.audit.mole_balance_error
              << " mol, max_utilization=" << result.audit.max_utilization
              << ", starvation_steps=" << result.audit.starvation_steps
              << ", overpressure_steps=" << result.audit.overpressure_steps << "\n";
    return 0;
}

int cmd_sweep(const std::optional<fs::path>& config_path, const fs::path& profiles_dir,
              const fs::path& out_dir, int parallel) {
    const hessim::Config config = effective_config(config_path);
    std::vector<fs::path> profile_files;
    for (const auto& entry : fs::directory_iterator(profiles_dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".csv") {
            profile_files.push_back(entry.path());
        }
    }
    std::sort(profile_files.begin(), profile_files.end());
    if (profile_files.empty()) {
        std::cerr << "error: no .csv profiles in " << profiles_dir.string() << "\n";
        return 1;
    }
    std::vector<hessim::Scenario> scenarios;
    scenarios.reserve(profile_files.size());
    for (const auto& path : profile_files) {
        hessim::Profile profile = hessim::load_profile(path);
        scenarios.push_back(hessim::make_scenario(config, std::move(profile.renewable),
                                                  std::move(profile.load), path.stem().string()));
    }
    const auto outcomes = hessim::sweep(scenarios, parallel);
    fs::create_directories(out_dir);
    hessim::save_config(config, out_dir / "effective_config.json");
    int failures = 0;
    for (const auto& outcome : outcomes) {
        if (outcome.ok) {
            hessim::export_result(outcome.result, out_dir / outcome.name);
            std::cout << "ok   " << outcome.name << "\n";
        } else {
            ++failures;
            std::cerr << "fail " << outcome.name << ": " << outcome.error << "\n";
        }
    }
    std::cout << (outcomes.size() - failures) << "/" << outcomes.size() << " scenarios succeeded\n";
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"DC microgrid hydrogen + battery energy storage simulator"};
    app.require_subcommand(1);

    std::string config_arg;
    std::string profile_arg;
    std::string profiles_arg;
    std::string out_arg;
    std::string which_arg;
    int parallel = 1;

    auto* run_cmd = app.add_subcommand("run", "Simulate one scenario and export results");
    run_cmd->add_option("--config", config_arg, "Config JSON (defaults when omitted)");
    run_cmd->add_option("--profile", profile_arg, "Profile CSV (t_s,p_renewable_w,p_load_w)")
        ->required();
    run_cmd->add_option("--out", out_arg, "Output directory")->required();

    auto* sweep_cmd = app.add_subcommand("sweep", "Simulate every profile in a directory");
    sweep_cmd->add_option("--config", config_arg, "Config JSON (defaults when omitted)");
    sweep_cmd->add_option("--profiles", profiles_arg, "Directory of profile CSVs")->required();
    sweep_cmd->add_option("--out", out_arg, "Output directory (one subdir per profile)")
        ->required();
    sweep_cmd->add_option("--parallel", parallel, "Worker threads")->check(CLI::PositiveNumber);

    auto* validate_cmd = app.add_subcommand("validate", "Check a config file");
    validate_cmd->add_option("--config", config_arg, "Config JSON")->required();

    auto* scenarios_cmd = app.add_subcommand("scenarios", "Bundled scenario utilities");
    scenarios_cmd->require_subcommand(1);
    auto* emit_cmd = scenarios_cmd->add_subcommand("emit", "Write a bundled profile");
    emit_cmd->add_option("which", which_arg, "fig5 or fig6")
        ->required()
        ->check(CLI::IsMember({"fig5", "fig6"}));
    emit_cmd->add_option("--out", out_arg, "Output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        const std::optional<fs::path> config_path =
            config_arg.empty() ? std::nullopt : std::make_optional<fs::path>(config_arg);
        if (run_cmd->parsed()) {
            return cmd_run(config_path, profile_arg, out_arg);
        }
        if (sweep_cmd->parsed()) {
            return cmd_sweep(config_path, profiles_arg, out_arg, parallel);
        }
        if (validate_cmd->parsed()) {
            hessim::load_config(*config_path);
            std::cout << "config OK: " << config_path->string() << "\n";
            return 0;
        }
        if (scenarios_cmd->parsed()) {
            const fs::path written = hessim::emit_bundled_profile(which_arg, out_arg);
            std::cout << "wrote " << written.string() << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

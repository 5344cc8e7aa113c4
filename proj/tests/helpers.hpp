/*
 * Copyright (c) The hessim project contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#pragma once

#include <atomic>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <unistd.h>

#include "hessim/config.hpp"
#include "hessim/io.hpp"
#include "hessim/scenario.hpp"

namespace hessim::test {

inline Scenario scenario_from_profile_text(const std::string& csv, const std::string& name,
                                           Config config = Config{}) {
    Profile profile = parse_profile_csv(csv, name);
    return make_scenario(config, std::move(profile.renewable), std::move(profile.load), name);
}

inline Scenario fig5_scenario(Config config = Config{}) {
    return scenario_from_profile_text(fig5_profile_csv(), "fig5", std::move(config));
}

inline Scenario fig6_scenario(Config config = Config{}) {
    return scenario_from_profile_text(fig6_profile_csv(), "fig6", std::move(config));
}

/// Builds a profile from (t, surplus) breakpoints; negative surplus becomes
/// load, positive becomes renewable generation.
inline Scenario step_scenario(const std::vector<std::pair<double, double>>& segments,
                              double duration, const std::string& name,
                              Config config = Config{}) {
    config.engine.duration = duration;
    TimeSeries renewable("p_renewable", "W");
    TimeSeries load("p_load", "W");
    for (const auto& [t, surplus] : segments) {
        renewable.push(t, surplus > 0.0 ? surplus : 0.0);
        load.push(t, surplus < 0.0 ? -surplus : 0.0);
    }
    return make_scenario(config, std::move(renewable), std::move(load), name);
}

/// Unique scratch directory under the system temp dir, removed on destruction.
class TempDir {
public:
    explicit TempDir(const std::string& tag) {
        static std::atomic<unsigned> counter{0};
        path_ = std::filesystem::temp_directory_path() /
                ("hessim_" + tag + "_" + std::to_string(counter.fetch_add(1)) + "_" +
                 std::to_string(static_cast<unsigned>(::getpid())));
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path_, ec);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;
    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

inline std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace hessim::test

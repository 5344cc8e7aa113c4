/*
 * Copyright (c) The hessim project contributors
 *
 * SPDX-License-Identifier: Apache-2.0
 */
#include <benchmark/benchmark.h>

#include "hessim/config.hpp"
#include "hessim/engine.hpp"
#include "hessim/fuel_cell.hpp"
#include "hessim/io.hpp"
#include "hessim/tank.hpp"

namespace {

hessim::Scenario bundled_scenario(const std::string& which) {
    hessim::Profile profile = hessim::parse_profile_csv(
        which == "fig5" ? hessim::fig5_profile_csv() : hessim::fig6_profile_csv(), which);
    return hessim::make_scenario(hessim::Config{}, std::move(profile.renewable),
                                 std::move(profile.load), which);
}

void BM_RunFig5(benchmark::State& state) {
    const hessim::Scenario scenario = bundled_scenario("fig5");
    for (auto _ : state) {
        benchmark::DoNotOptimize(hessim::run(scenario));
    }
    state.SetItemsProcessed(state.iterations() * 6000);
}
BENCHMARK(BM_RunFig5)->Unit(benchmark::kMillisecond);

void BM_RunFig6(benchmark::State& state) {
    const hessim::Scenario scenario = bundled_scenario("fig6");
    for (auto _ : state) {
        benchmark::DoNotOptimize(hessim::run(scenario));
    }
    state.SetItemsProcessed(state.iterations() * 6000);
}
BENCHMARK(BM_RunFig6)->Unit(benchmark::kMillisecond);

void BM_CurrentForPower(benchmark::State& state) {
    const hessim::FuelCellParams params;
    double request = 100.0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(hessim::current_for_power(params, request));
        request = request >= 5500.0 ? 100.0 : request + 100.0;
    }
}
BENCHMARK(BM_CurrentForPower);

void BM_TankStep(benchmark::State& state) {
    const hessim::TankParams params;
    hessim::TankState tank = hessim::initial_tank_state(params);
    for (auto _ : state) {
        tank = hessim::tank_step(params, tank, 1e-4, 5e-5, 0.1).state;
        benchmark::DoNotOptimize(tank);
    }
}
BENCHMARK(BM_TankStep);

} // namespace

BENCHMARK_MAIN();

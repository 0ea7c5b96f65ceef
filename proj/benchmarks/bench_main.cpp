#include <benchmark/benchmark.h>

#include "uavgame/coverage.hpp"
#include "uavgame/learning.hpp"
#include "uavgame/market.hpp"
#include "uavgame/temporal.hpp"

namespace {

using namespace uavgame;

GameConfig bench_config() {
    GameConfig cfg;
    cfg.timing = {1.0, 100};
    cfg.market = {4.0, 50, 0.0, 10.0, {0.5, 0.5}};
    for (auto& u : cfg.uav) {
        u.encounter_rate = 1.0;
        u.coverage = CoverageDirect{0.8};
        u.energy = {0.1, 0.1, 0.1, 0.1, BeaconTerm::DutyCycle};
    }
    cfg.resolved_coverage = {0.8, 0.8};
    return cfg;
}

void BM_beacon_prob(benchmark::State& state) {
    const TimingConfig timing{1.0, 100};
    double tau = 0.3;
    for (auto _ : state) {
        benchmark::DoNotOptimize(beacon_prob(1.0, tau, timing));
    }
}
BENCHMARK(BM_beacon_prob);

void BM_service_prob(benchmark::State& state) {
    const GameConfig cfg = bench_config();
    const StrategyProfile p{Strategy{0.4, 3.0}, Strategy{0.6, 5.0}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(service_prob(p, cfg, 0));
    }
}
BENCHMARK(BM_service_prob);

void BM_utility(benchmark::State& state) {
    const GameConfig cfg = bench_config();
    const StrategyProfile p{Strategy{0.4, 3.0}, Strategy{0.6, 5.0}};
    for (auto _ : state) {
        benchmark::DoNotOptimize(utility(p, cfg, 0));
    }
}
BENCHMARK(BM_utility);

void BM_logit_share(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(logit_share(3.0, 5.0, 4.0));
    }
}
BENCHMARK(BM_logit_share);

void BM_coverage_sigmoid(benchmark::State& state) {
    RadioParams radio;
    radio.tx_power = 0.5;
    radio.noise_power = 1e-4;
    radio.sinr_threshold = 5.0;
    radio.pathloss_exponent = 2.0;
    radio.altitude = 100.0;
    radio.cell_radius = 500.0;
    radio.los_model = LosElevationSigmoid{5.0, 0.5};
    for (auto _ : state) {
        benchmark::DoNotOptimize(coverage_prob(radio));
    }
}
BENCHMARK(BM_coverage_sigmoid);

void BM_best_response(benchmark::State& state) {
    const GameConfig cfg = bench_config();
    LearningConfig lc;
    lc.grid_resolution = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(best_response(0, Strategy{0.5, 5.0}, cfg, lc));
    }
}
BENCHMARK(BM_best_response)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();

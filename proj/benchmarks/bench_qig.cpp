// Copyright 2026 The qig Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <numbers>

#include "qig/basisopt.hpp"
#include "qig/entropy.hpp"
#include "qig/expsim.hpp"
#include "qig/geometry.hpp"
#include "qig/metrics.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

void BM_Umegaki(benchmark::State& state) {
    const auto [a, b] = qig::CanonicalPair{0.9, 0.5, kPi / 2}.states();
    for (auto _ : state) {
        benchmark::DoNotOptimize(qig::umegaki_entropy(a, b));
    }
}
BENCHMARK(BM_Umegaki);

void BM_OptimizeBeta(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(qig::optimize_beta(0.9, 0.5, kPi / 2));
    }
}
BENCHMARK(BM_OptimizeBeta)->Unit(benchmark::kMicrosecond);

void BM_BellStrategy(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(qig::two_qubit_bell_strategy(0.9, 0.5, kPi / 2));
    }
}
BENCHMARK(BM_BellStrategy)->Unit(benchmark::kMicrosecond);

void BM_MonteCarlo(benchmark::State& state) {
    const auto [a, b] = qig::CanonicalPair{0.9, 0.5, kPi / 2}.states();
    qig::McConfig cfg;
    cfg.steps = 10000;
    cfg.restarts = 1;
    for (auto _ : state) {
        benchmark::DoNotOptimize(qig::mc_optimize(a, b, static_cast<int>(state.range(0)), cfg));
    }
}
BENCHMARK(BM_MonteCarlo)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_BkmQubit(benchmark::State& state) {
    const qig::BlochVector x(Eigen::Vector3d(0.3, -0.4, 0.5));
    const Eigen::Vector3d dx(0.1, 0.2, -0.3);
    for (auto _ : state) {
        benchmark::DoNotOptimize(qig::bkm_qubit(x, dx));
    }
}
BENCHMARK(BM_BkmQubit);

void BM_GeodesicBvp(benchmark::State& state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(qig::geodesic_bvp({0.9, 0.0}, {0.5, kPi / 2}));
    }
}
BENCHMARK(BM_GeodesicBvp)->Unit(benchmark::kMillisecond);

void BM_Simulate(benchmark::State& state) {
    const auto [a, b] = qig::CanonicalPair{0.9, 0.5, kPi / 2}.states();
    for (auto _ : state) {
        qig::Rng rng(1);
        benchmark::DoNotOptimize(qig::run_discrimination(a, b, qig::Strategy::Entangled, 100000, rng));
    }
}
BENCHMARK(BM_Simulate)->Unit(benchmark::kMillisecond);

} // namespace

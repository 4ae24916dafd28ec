// Copyright 2026 The paulilearn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <omp.h>

#include "benchmark/benchmark.h"
#include "paulilearn/channel.h"
#include "paulilearn/lecam_game.h"
#include "paulilearn/protocols.h"
#include "paulilearn/symplectic_transform.h"

using namespace paulilearn;

namespace {

std::vector<double> random_rates(unsigned n) {
    Rng rng(n);
    auto c = random_channel(n, rng);
    return {c.error_rates().begin(), c.error_rates().end()};
}

void BM_transform_reference(benchmark::State &state) {
    auto v = random_rates(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(kernels::symplectic_transform_reference(v));
    }
}
BENCHMARK(BM_transform_reference)->DenseRange(1, 5);

void BM_transform_serial(benchmark::State &state) {
    auto v = random_rates(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) {
        kernels::symplectic_transform_serial(v);
        benchmark::ClobberMemory();
    }
}
BENCHMARK(BM_transform_serial)->DenseRange(1, 11, 2);

void BM_transform_parallel(benchmark::State &state) {
    auto v = random_rates(static_cast<unsigned>(state.range(0)));
    for (auto _ : state) {
        kernels::symplectic_transform_parallel(v);
        benchmark::ClobberMemory();
    }
}
BENCHMARK(BM_transform_parallel)->DenseRange(1, 11, 2);

void BM_game_serial(benchmark::State &state) {
    EntanglementAssistedPlayer ea(ea_sample_count(0.15, 1.0 / 3, 2, 0), 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(lecam_game_serial(2, 0.3, ea, 200, 1));
    }
}
BENCHMARK(BM_game_serial)->Unit(benchmark::kMillisecond);

void BM_game_parallel(benchmark::State &state) {
    EntanglementAssistedPlayer ea(ea_sample_count(0.15, 1.0 / 3, 2, 0), 0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(lecam_game(2, 0.3, ea, 200, 1));
    }
    state.counters["threads"] = omp_get_max_threads();
}
BENCHMARK(BM_game_parallel)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

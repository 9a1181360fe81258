// Copyright 2026 The qram_repair Authors
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

#include <benchmark/benchmark.h>

#include "qrr/qram_circuit.h"
#include "qrr/qec_defect.h"
#include "qrr/statevec.h"
#include "qrr/yield_engine.h"

namespace qrr {
namespace {

void BM_SamplePatch(benchmark::State &state) {
    const QecParams qec(static_cast<int>(state.range(0)));
    const FabricationModel fab(0.005);
    Xoshiro256 rng(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample_patch(qec, fab, rng));
    }
    state.SetItemsProcessed(state.iterations() * qec.physical_per_logical());
}
BENCHMARK(BM_SamplePatch)->Arg(3)->Arg(9);

void BM_SimulateChip(benchmark::State &state) {
    const ChipSpec spec{static_cast<int>(state.range(0)), 8, QecParams(3), FabricationModel(0.005), true};
    Xoshiro256 rng(2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate_chip(spec, rng));
    }
}
BENCHMARK(BM_SimulateChip)->Arg(256)->Arg(1024);

void BM_SimulateYield(benchmark::State &state) {
    const ChipSpec spec{256, 0, QecParams(5), FabricationModel(0.005), true};
    for (auto _ : state) {
        benchmark::DoNotOptimize(simulate_yield(spec, 100, 10, 3));
    }
}
BENCHMARK(BM_SimulateYield)->Unit(benchmark::kMillisecond);

void BM_ApplyMcx(benchmark::State &state) {
    const int m = static_cast<int>(state.range(0));
    QubitState s(m);
    const auto gate = GateSpec::mcx({pos(0), neg(1), pos(2)}, m - 1);
    for (auto _ : state) {
        s.apply(gate);
    }
    state.SetBytesProcessed(state.iterations() * static_cast<int64_t>(sizeof(Amplitude)) << m);
}
BENCHMARK(BM_ApplyMcx)->Arg(12)->Arg(19)->Arg(22);

void BM_ApplyH(benchmark::State &state) {
    QubitState s(19);
    for (auto _ : state) {
        s.apply(GateSpec::h(7));
    }
}
BENCHMARK(BM_ApplyH);

void BM_RunQuery(benchmark::State &state) {
    const auto layout = build_layout(2, 2);
    const FaultAddressTable fat(2, {{1, 0}, {2, 1}});
    const std::vector<bool> memory{true, false, true, false, false, true};
    for (auto _ : state) {
        benchmark::DoNotOptimize(
            run_query(layout, memory, fat, QueryAddress::superposition(), QueryMode::Read, false));
    }
}
BENCHMARK(BM_RunQuery)->Unit(benchmark::kMillisecond);

void BM_VerifyExhaustive(benchmark::State &state) {
    for (auto _ : state) {
        benchmark::DoNotOptimize(verify_against_classical(2, 1));
    }
}
BENCHMARK(BM_VerifyExhaustive)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace qrr

BENCHMARK_MAIN();

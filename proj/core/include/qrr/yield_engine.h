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

#ifndef QRR_YIELD_ENGINE_H
#define QRR_YIELD_ENGINE_H

#include <compare>
#include <cstdint>
#include <vector>

#include "qrr/qec_defect.h"
#include "qrr/random.h"

namespace qrr {

/// A fabricated qRAM: N original memory logical qubits plus X spares, all
/// encoded at the same code distance.
struct ChipSpec {
    int num_logical;
    int num_spares;
    QecParams qec;
    FabricationModel fab;
    /// When true, spares are fabricated like originals and can themselves be
    /// defective; a chip is good iff total defects among N + X patches <= X.
    bool spares_fallible = true;

    /// Throws std::invalid_argument on N < 1 or X < 0.
    void validate() const;
};

struct ChipOutcome {
    int defective_originals = 0;
    int defective_spares = 0;
    bool repairable = true;
};

/// Samples the N originals then the X spares (spares skipped when infallible).
ChipOutcome simulate_chip(const ChipSpec &spec, Xoshiro256 &rng);

/// Closed-form yield (probability in [0, 1]) under the same model.
double analytic_yield(const ChipSpec &spec);

struct ExecutionOptions {
    /// Worker threads; 0 means "use default_thread_count()". Never affects results.
    int threads = 0;
};

/// Reads QRR_THREADS from the environment, falling back to hardware concurrency.
int default_thread_count();

struct YieldReport {
    ChipSpec spec;
    int chips_per_rep;
    int reps;
    uint64_t master_seed;
    uint64_t point_index;
    std::vector<int64_t> defective_per_rep;
    double yield_mean_pct;
    double yield_std_pct;  // sample std of the per-rep yields
    double analytic_pct;
    double binomial_se_pct;  // 100 * sqrt(y (1 - y) / total chips), y = analytic
};

/// Runs reps x chips_per_rep independent chips. Chip c of rep r draws from
/// the stream derive_seed(master_seed, {point_index, r, c}), so the result is
/// identical for every thread count.
YieldReport simulate_yield(const ChipSpec &spec, int chips_per_rep, int reps, uint64_t master_seed,
                           uint64_t point_index = 0, ExecutionOptions exec = {});

struct SweepPoint {
    int distance;
    int num_logical;
    int num_spares;
    double error_rate;

    auto operator<=>(const SweepPoint &) const = default;
};

struct SweepGrid {
    std::vector<int> distances;
    std::vector<int> logical_counts;
    std::vector<int> spare_counts;
    std::vector<double> error_rates;
    int chips_per_rep = 1000;
    int reps = 10;
    uint64_t master_seed = 0;
    bool spares_fallible = true;

    /// Cartesian product in lexicographic (distance, N, X, p) order.
    /// Throws std::invalid_argument if an axis is empty or a rate is outside [0, 1].
    std::vector<SweepPoint> points() const;
};

std::vector<YieldReport> sweep(const SweepGrid &grid, ExecutionOptions exec = {});

/// Sorts and de-duplicates the points, then simulates each; point i of the
/// sorted list uses point_index i.
std::vector<YieldReport> sweep_points(std::vector<SweepPoint> points, int chips_per_rep, int reps,
                                      uint64_t master_seed, bool spares_fallible, ExecutionOptions exec = {});

/// Yield at (d = 3, X = rr_spares) minus the mean X = 0 yield over `distances`,
/// in percentage points. Analytic variant.
double yield_improvement(int num_logical, double error_rate, const std::vector<int> &distances, int rr_spares,
                         bool spares_fallible = true);

/// Monte-Carlo variant of yield_improvement.
double yield_improvement_mc(int num_logical, double error_rate, const std::vector<int> &distances, int rr_spares,
                            int chips_per_rep, int reps, uint64_t master_seed, bool spares_fallible = true,
                            ExecutionOptions exec = {});

}  // namespace qrr

#endif  // QRR_YIELD_ENGINE_H

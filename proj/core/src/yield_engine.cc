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

#include "qrr/yield_engine.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

namespace qrr {

void ChipSpec::validate() const {
    if (num_logical < 1) {
        throw std::invalid_argument("number of logical qubits must be >= 1, got " + std::to_string(num_logical));
    }
    if (num_spares < 0) {
        throw std::invalid_argument("number of spares must be >= 0, got " + std::to_string(num_spares));
    }
}

ChipOutcome simulate_chip(const ChipSpec &spec, Xoshiro256 &rng) {
    ChipOutcome out;
    for (int i = 0; i < spec.num_logical; i++) {
        out.defective_originals += sample_patch(spec.qec, spec.fab, rng).defective ? 1 : 0;
    }
    if (spec.spares_fallible) {
        for (int i = 0; i < spec.num_spares; i++) {
            out.defective_spares += sample_patch(spec.qec, spec.fab, rng).defective ? 1 : 0;
        }
    }
    out.repairable = out.defective_originals <= spec.num_spares - out.defective_spares;
    return out;
}

double analytic_yield(const ChipSpec &spec) {
    spec.validate();
    const double q = logical_defect_prob(spec.qec, spec.fab);
    if (spec.spares_fallible) {
        return binomial_cdf(spec.num_logical + spec.num_spares, spec.num_spares, q);
    }
    return binomial_cdf(spec.num_logical, spec.num_spares, q);
}

int default_thread_count() {
    if (const char *env = std::getenv("QRR_THREADS")) {
        char *end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) {
            return static_cast<int>(std::min<long>(v, 256));
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

constexpr int64_t kChipsPerBlock = 128;

}  // namespace

YieldReport simulate_yield(const ChipSpec &spec, int chips_per_rep, int reps, uint64_t master_seed,
                           uint64_t point_index, ExecutionOptions exec) {
    spec.validate();
    if (chips_per_rep < 1 || reps < 1) {
        throw std::invalid_argument("chips_per_rep and reps must both be >= 1");
    }

    const int64_t blocks_per_rep = (chips_per_rep + kChipsPerBlock - 1) / kChipsPerBlock;
    const int64_t total_blocks = blocks_per_rep * reps;
    const int threads =
        static_cast<int>(std::min<int64_t>(exec.threads > 0 ? exec.threads : default_thread_count(), total_blocks));

    std::atomic<int64_t> next_block{0};
    std::vector<std::vector<int64_t>> partial(static_cast<size_t>(threads), std::vector<int64_t>(reps, 0));

    auto worker = [&](std::vector<int64_t> &counts) {
        for (int64_t b = next_block.fetch_add(1); b < total_blocks; b = next_block.fetch_add(1)) {
            const int64_t rep = b / blocks_per_rep;
            const int64_t first = (b % blocks_per_rep) * kChipsPerBlock;
            const int64_t last = std::min<int64_t>(first + kChipsPerBlock, chips_per_rep);
            for (int64_t chip = first; chip < last; chip++) {
                Xoshiro256 rng(derive_seed(master_seed, {point_index, static_cast<uint64_t>(rep),
                                                         static_cast<uint64_t>(chip)}));
                if (!simulate_chip(spec, rng).repairable) {
                    counts[static_cast<size_t>(rep)]++;
                }
            }
        }
    };

    if (threads <= 1) {
        worker(partial[0]);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(static_cast<size_t>(threads));
        for (int t = 0; t < threads; t++) {
            pool.emplace_back(worker, std::ref(partial[static_cast<size_t>(t)]));
        }
    }

    YieldReport report{spec, chips_per_rep, reps, master_seed, point_index, std::vector<int64_t>(reps, 0),
                       0.0,  0.0,           0.0,  0.0};
    for (const auto &counts : partial) {
        for (int r = 0; r < reps; r++) {
            report.defective_per_rep[static_cast<size_t>(r)] += counts[static_cast<size_t>(r)];
        }
    }

    std::vector<double> yields;
    yields.reserve(static_cast<size_t>(reps));
    for (int64_t defective : report.defective_per_rep) {
        yields.push_back((1.0 - static_cast<double>(defective) / chips_per_rep) * 100.0);
    }
    const double mean = std::accumulate(yields.begin(), yields.end(), 0.0) / reps;
    double ss = 0.0;
    for (double y : yields) {
        ss += (y - mean) * (y - mean);
    }
    report.yield_mean_pct = mean;
    report.yield_std_pct = reps > 1 ? std::sqrt(ss / (reps - 1)) : 0.0;

    const double y = analytic_yield(spec);
    report.analytic_pct = 100.0 * y;
    report.binomial_se_pct = 100.0 * std::sqrt(y * (1.0 - y) / (static_cast<double>(chips_per_rep) * reps));
    return report;
}

std::vector<SweepPoint> SweepGrid::points() const {
    if (distances.empty() || logical_counts.empty() || spare_counts.empty() || error_rates.empty()) {
        throw std::invalid_argument("every sweep axis needs at least one value");
    }
    for (double p : error_rates) {
        FabricationModel{p};
    }
    std::vector<int> ds = distances, ns = logical_counts, xs = spare_counts;
    std::vector<double> ps = error_rates;
    for (auto *axis : {&ds, &ns, &xs}) {
        std::sort(axis->begin(), axis->end());
        axis->erase(std::unique(axis->begin(), axis->end()), axis->end());
    }
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());

    std::vector<SweepPoint> out;
    for (int d : ds) {
        for (int n : ns) {
            for (int x : xs) {
                for (double p : ps) {
                    out.push_back({d, n, x, p});
                }
            }
        }
    }
    return out;
}

std::vector<YieldReport> sweep_points(std::vector<SweepPoint> points, int chips_per_rep, int reps,
                                      uint64_t master_seed, bool spares_fallible, ExecutionOptions exec) {
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    std::vector<YieldReport> out;
    out.reserve(points.size());
    for (size_t i = 0; i < points.size(); i++) {
        const auto &pt = points[i];
        ChipSpec spec{pt.num_logical, pt.num_spares, QecParams(pt.distance), FabricationModel(pt.error_rate),
                      spares_fallible};
        out.push_back(simulate_yield(spec, chips_per_rep, reps, master_seed, i, exec));
    }
    return out;
}

std::vector<YieldReport> sweep(const SweepGrid &grid, ExecutionOptions exec) {
    return sweep_points(grid.points(), grid.chips_per_rep, grid.reps, grid.master_seed, grid.spares_fallible, exec);
}

double yield_improvement(int num_logical, double error_rate, const std::vector<int> &distances, int rr_spares,
                         bool spares_fallible) {
    if (distances.empty()) {
        throw std::invalid_argument("yield_improvement needs at least one distance");
    }
    const FabricationModel fab(error_rate);
    double baseline = 0.0;
    for (int d : distances) {
        baseline += analytic_yield({num_logical, 0, QecParams(d), fab, spares_fallible});
    }
    baseline /= static_cast<double>(distances.size());
    const double repaired = analytic_yield({num_logical, rr_spares, QecParams(3), fab, spares_fallible});
    return 100.0 * (repaired - baseline);
}

double yield_improvement_mc(int num_logical, double error_rate, const std::vector<int> &distances, int rr_spares,
                            int chips_per_rep, int reps, uint64_t master_seed, bool spares_fallible,
                            ExecutionOptions exec) {
    if (distances.empty()) {
        throw std::invalid_argument("yield_improvement needs at least one distance");
    }
    const FabricationModel fab(error_rate);
    double baseline = 0.0;
    uint64_t index = 0;
    for (int d : distances) {
        ChipSpec spec{num_logical, 0, QecParams(d), fab, spares_fallible};
        baseline += simulate_yield(spec, chips_per_rep, reps, master_seed, index++, exec).yield_mean_pct;
    }
    baseline /= static_cast<double>(distances.size());
    ChipSpec repaired{num_logical, rr_spares, QecParams(3), fab, spares_fallible};
    return simulate_yield(repaired, chips_per_rep, reps, master_seed, index, exec).yield_mean_pct - baseline;
}

}  // namespace qrr

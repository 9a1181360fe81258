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

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "qrr/yield_engine.h"

namespace qrr {
namespace {

ChipSpec chip(int d, int n, int x, double p, bool fallible = true) {
    return ChipSpec{n, x, QecParams(d), FabricationModel(p), fallible};
}

// Independent oracle: exact polynomial expansion of the chip-good event.
double oracle_yield(int d, int n, int x, double p, bool fallible) {
    const int phys = 2 * d * d - 1;
    const int t = (d - 1) / 2;
    long double q = 0.0L;
    for (int k = t + 1; k <= phys; k++) {
        long double c = 1.0L;
        for (int i = 1; i <= k; i++) {
            c = c * (phys - k + i) / i;
        }
        q += c * std::pow(static_cast<long double>(p), k) * std::pow(1.0L - p, phys - k);
    }
    const int trials = fallible ? n + x : n;
    // dp[j] = P(j defective patches so far), truncated at x.
    std::vector<long double> dp(static_cast<size_t>(x) + 2, 0.0L);
    dp[0] = 1.0L;
    for (int i = 0; i < trials; i++) {
        for (int j = x + 1; j >= 0; j--) {
            const long double stay = dp[static_cast<size_t>(j)] * (1.0L - q);
            const long double move = j > 0 ? dp[static_cast<size_t>(j - 1)] * q : 0.0L;
            dp[static_cast<size_t>(j)] = stay + move;
        }
    }
    long double good = 0.0L;
    for (int j = 0; j <= x; j++) {
        good += dp[static_cast<size_t>(j)];
    }
    return static_cast<double>(good);
}

TEST(AnalyticYield, MatchesIndependentOracle) {
    for (int d : {3, 5, 7, 9}) {
        for (int n : {16, 128, 1024}) {
            for (int x : {0, 1, 2, 4, 8}) {
                for (double p : {0.005, 0.01}) {
                    for (bool fallible : {true, false}) {
                        EXPECT_NEAR(analytic_yield(chip(d, n, x, p, fallible)), oracle_yield(d, n, x, p, fallible),
                                    1e-10)
                            << d << " " << n << " " << x << " " << p << " " << fallible;
                    }
                }
            }
        }
    }
}

TEST(AnalyticYield, Monotonicity) {
    for (int n : {16, 256, 1024}) {
        double prev_x = -1.0;
        for (int x : {0, 1, 2, 4, 8}) {
            const double y = analytic_yield(chip(3, n, x, 0.008));
            EXPECT_GT(y, prev_x);
            prev_x = y;
        }
        double prev_d = -1.0;
        for (int d : {3, 5, 7, 9}) {
            const double y = analytic_yield(chip(d, n, 0, 0.005));
            EXPECT_GT(y, prev_d);
            prev_d = y;
        }
        double prev_p = 2.0;
        for (int i = 5; i <= 10; i++) {
            const double y = analytic_yield(chip(3, n, 2, i / 1000.0));
            EXPECT_LT(y, prev_p);
            prev_p = y;
        }
    }
    double prev_n = 2.0;
    for (int n = 16; n <= 1024; n *= 2) {
        const double y = analytic_yield(chip(5, n, 1, 0.007));
        EXPECT_LT(y, prev_n);
        prev_n = y;
    }
}

TEST(AnalyticYield, InfallibleSparesNeverHurt) {
    for (int x : {1, 2, 4, 8}) {
        EXPECT_GE(analytic_yield(chip(3, 256, x, 0.01, false)), analytic_yield(chip(3, 256, x, 0.01, true)));
    }
    EXPECT_EQ(analytic_yield(chip(3, 256, 0, 0.01, false)), analytic_yield(chip(3, 256, 0, 0.01, true)));
}

TEST(ChipSpec, Validation) {
    EXPECT_THROW(chip(3, 0, 0, 0.01).validate(), std::invalid_argument);
    EXPECT_THROW(chip(3, 16, -1, 0.01).validate(), std::invalid_argument);
    EXPECT_THROW(simulate_yield(chip(3, 16, 0, 0.01), 0, 1, 1), std::invalid_argument);
    EXPECT_THROW(simulate_yield(chip(3, 16, 0, 0.01), 10, 0, 1), std::invalid_argument);
}

TEST(SimulateYield, PerfectFabricationGivesFullYield) {
    const auto r = simulate_yield(chip(3, 64, 0, 0.0), 100, 3, 1);
    EXPECT_EQ(r.yield_mean_pct, 100.0);
    EXPECT_EQ(r.yield_std_pct, 0.0);
    EXPECT_EQ(r.analytic_pct, 100.0);
}

TEST(SimulateYield, SummaryStatisticsFollowPerRepCounts) {
    const auto r = simulate_yield(chip(3, 256, 0, 0.005), 200, 6, 77);
    ASSERT_EQ(r.defective_per_rep.size(), 6u);
    std::vector<double> ys;
    for (auto k : r.defective_per_rep) {
        ys.push_back(100.0 * (1.0 - static_cast<double>(k) / 200.0));
    }
    const double mean = std::accumulate(ys.begin(), ys.end(), 0.0) / 6.0;
    double ss = 0.0;
    for (double y : ys) {
        ss += (y - mean) * (y - mean);
    }
    EXPECT_NEAR(r.yield_mean_pct, mean, 1e-9);
    EXPECT_NEAR(r.yield_std_pct, std::sqrt(ss / 5.0), 1e-9);
}

TEST(SimulateYield, DeterministicAndThreadInvariant) {
    const auto spec = chip(5, 128, 2, 0.009);
    const auto base = simulate_yield(spec, 700, 4, 123, 5, {1});
    for (int threads : {2, 3, 8}) {
        const auto r = simulate_yield(spec, 700, 4, 123, 5, {threads});
        EXPECT_EQ(r.defective_per_rep, base.defective_per_rep) << threads;
    }
    EXPECT_NE(simulate_yield(spec, 700, 4, 124, 5, {1}).defective_per_rep, base.defective_per_rep);
    EXPECT_NE(simulate_yield(spec, 700, 4, 123, 6, {1}).defective_per_rep, base.defective_per_rep);
}

TEST(SimulateYield, AgreesWithAnalyticWithinFourSigma) {
    for (const auto &spec : {chip(3, 256, 0, 0.005), chip(3, 128, 2, 0.01), chip(7, 64, 1, 0.008),
                             chip(3, 512, 4, 0.007, false)}) {
        const auto r = simulate_yield(spec, 1000, 10, 31337);
        const double y = analytic_yield(spec);
        const double se = std::sqrt(y * (1.0 - y) / 10000.0);
        EXPECT_NEAR(r.yield_mean_pct / 100.0, y, 4.0 * se);
        EXPECT_NEAR(r.binomial_se_pct, 100.0 * se, 1e-9);
    }
}

TEST(Sweep, GridIsSortedProduct) {
    SweepGrid grid{{5, 3}, {32, 16}, {0}, {0.01, 0.005}, 50, 2, 9, true};
    const auto pts = grid.points();
    ASSERT_EQ(pts.size(), 8u);
    EXPECT_TRUE(std::is_sorted(pts.begin(), pts.end()));
    EXPECT_EQ(pts.front(), (SweepPoint{3, 16, 0, 0.005}));
    const auto reports = sweep(grid, {1});
    ASSERT_EQ(reports.size(), 8u);
    EXPECT_EQ(reports[3].point_index, 3u);
    EXPECT_THROW((SweepGrid{{}, {16}, {0}, {0.01}}.points()), std::invalid_argument);
    EXPECT_THROW((SweepGrid{{3}, {16}, {0}, {1.5}}.points()), std::invalid_argument);
}

TEST(Sweep, PointsAreDeduplicated) {
    const auto r = sweep_points({{3, 16, 0, 0.005}, {3, 16, 0, 0.005}, {3, 8, 0, 0.005}}, 10, 2, 1, true);
    ASSERT_EQ(r.size(), 2u);
    EXPECT_EQ(r[0].spec.num_logical, 8);
}

TEST(Improvement, AnalyticMatchesDefinition) {
    const std::vector<int> ds{3, 5, 7, 9};
    for (int n : {16, 256, 1024}) {
        double mean0 = 0.0;
        for (int d : ds) {
            mean0 += analytic_yield(chip(d, n, 0, 0.005));
        }
        mean0 /= 4.0;
        const double want = 100.0 * (analytic_yield(chip(3, n, 8, 0.005)) - mean0);
        EXPECT_NEAR(yield_improvement(n, 0.005, ds, 8), want, 1e-9);
    }
}

TEST(Improvement, MonteCarloTracksAnalytic) {
    const std::vector<int> ds{3, 5};
    const double mc = yield_improvement_mc(128, 0.006, ds, 4, 1000, 4, 5);
    EXPECT_NEAR(mc, yield_improvement(128, 0.006, ds, 4), 3.0);
}

}  // namespace
}  // namespace qrr

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

#ifndef QRR_CLI_COMMANDS_H
#define QRR_CLI_COMMANDS_H

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "config.h"
#include "qrr/resource_model.h"
#include "qrr/yield_engine.h"

namespace qrr::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitConfig = 2,
    kExitIo = 3,
    kExitVerification = 4,
};

inline constexpr const char *kYieldCsvHeader =
    "qec_distance,num_logical,num_spares,error_rate,chips_per_rep,reps,yield_mean_pct,yield_std_pct,analytic_pct,"
    "seed";
inline constexpr const char *kResourceCsvHeader =
    "qec_distance,num_logical,num_spares,mem_qubits,peri_qubits,total_qubits,mem_overhead_pct,peri_overhead_pct";

std::string yield_csv(const std::vector<YieldReport> &rows);
/// With literal_mem, a trailing mem_qubits_literal column (d * (N + X)) is added.
std::string resource_csv(const std::vector<ResourceBreakdown> &rows, bool literal_mem = false);

int cmd_yield(const RunConfig &cfg, std::ostream &out, std::ostream &err);
int cmd_resource(const RunConfig &cfg, std::ostream &out, std::ostream &err);
int cmd_circuit_demo(const RunConfig &cfg, std::ostream &out, std::ostream &err, bool inject_bug = false);
int cmd_verify(const RunConfig &cfg, std::ostream &out, std::ostream &err, bool inject_bug = false);

struct OracleCheck {
    SweepPoint point;
    double mc_yield;  // probability
    double analytic;  // probability
    double tolerance;  // 4 binomial standard errors
    bool pass;
};

/// Draws `count` points from the standard grid (d in {3,5,7,9}, N in 16..1024,
/// X in {0,1,2,4,8}, p in 0.5..1.0 %) and compares Monte-Carlo yield against
/// analytic_yield at chips_per_rep * reps chips.
std::vector<OracleCheck> oracle_agreement_suite(int count, int chips_per_rep, int reps, uint64_t seed,
                                                bool spares_fallible, ExecutionOptions exec = {});

/// Full command-line entry point; args excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace qrr::cli

#endif  // QRR_CLI_COMMANDS_H

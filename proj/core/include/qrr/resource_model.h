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

#ifndef QRR_RESOURCE_MODEL_H
#define QRR_RESOURCE_MODEL_H

#include <cstdint>
#include <vector>

namespace qrr {

/// Physical qubits in the memory cells: (2d^2 - 1) * (N + X).
int64_t mem_qubits(int distance, int64_t num_logical, int64_t num_spares);

/// Literal distance-times-cells count d * (N + X). Does not reproduce the
/// published memory columns; kept for side-by-side comparison output.
int64_t mem_qubits_literal(int distance, int64_t num_logical, int64_t num_spares);

/// Peripheral logical qubits (address, spare address, routing, RFQ, |1>, DQ,
/// Readout, R/W). Throws NotPowerOfTwo unless N is a power of two >= 2.
///
///   X = 0:                 log2 N + N + 2
///   1 <= X <= 1 + log2 N:  3 log2 N + N + 4
///   X > 1 + log2 N:        2 log2 N + N + X + 3
int64_t peri_logical_count(int64_t num_logical, int64_t num_spares);

int64_t peri_qubits(int distance, int64_t num_logical, int64_t num_spares);

struct ResourceBreakdown {
    int distance;
    int64_t num_logical;
    int64_t num_spares;
    int64_t mem_qubits;
    int64_t peri_qubits;
    int64_t total;
    double mem_overhead_pct;   // relative to X = 0 at the same d, N
    double peri_overhead_pct;  // relative to X = 0 at the same d, N
};

ResourceBreakdown overhead(int distance, int64_t num_logical, int64_t num_spares);

/// Every (d, N, X) in {3,5,7,9} x {16,...,1024} x {0,1,2,4,8}, ordered by d, N, X.
std::vector<ResourceBreakdown> table1();

}  // namespace qrr

#endif  // QRR_RESOURCE_MODEL_H

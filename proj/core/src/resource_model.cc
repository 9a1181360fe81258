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

#include "qrr/resource_model.h"

#include <bit>
#include <stdexcept>
#include <string>

#include "qrr/errors.h"
#include "qrr/qec_defect.h"

namespace qrr {

namespace {

void check_counts(int64_t num_logical, int64_t num_spares) {
    if (num_logical < 0 || num_spares < 0) {
        throw std::invalid_argument("qubit counts must be non-negative");
    }
}

int64_t log2_exact(int64_t n) {
    if (n < 2 || !std::has_single_bit(static_cast<uint64_t>(n))) {
        throw NotPowerOfTwo(n);
    }
    return std::countr_zero(static_cast<uint64_t>(n));
}

}  // namespace

int64_t mem_qubits(int distance, int64_t num_logical, int64_t num_spares) {
    check_counts(num_logical, num_spares);
    return physical_per_logical(distance) * (num_logical + num_spares);
}

int64_t mem_qubits_literal(int distance, int64_t num_logical, int64_t num_spares) {
    check_counts(num_logical, num_spares);
    return QecParams(distance).distance() * (num_logical + num_spares);
}

int64_t peri_logical_count(int64_t num_logical, int64_t num_spares) {
    const int64_t lg = log2_exact(num_logical);
    if (num_spares < 0) {
        throw std::invalid_argument("number of spares must be >= 0");
    }
    if (num_spares == 0) {
        return lg + num_logical + 2;
    }
    if (num_spares <= 1 + lg) {
        return 3 * lg + num_logical + 4;
    }
    return 2 * lg + num_logical + num_spares + 3;
}

int64_t peri_qubits(int distance, int64_t num_logical, int64_t num_spares) {
    return physical_per_logical(distance) * peri_logical_count(num_logical, num_spares);
}

ResourceBreakdown overhead(int distance, int64_t num_logical, int64_t num_spares) {
    ResourceBreakdown r{};
    r.distance = distance;
    r.num_logical = num_logical;
    r.num_spares = num_spares;
    r.mem_qubits = mem_qubits(distance, num_logical, num_spares);
    r.peri_qubits = peri_qubits(distance, num_logical, num_spares);
    r.total = r.mem_qubits + r.peri_qubits;
    const double base_peri = static_cast<double>(peri_logical_count(num_logical, 0));
    r.mem_overhead_pct = 100.0 * static_cast<double>(num_spares) / static_cast<double>(num_logical);
    r.peri_overhead_pct =
        100.0 * (static_cast<double>(peri_logical_count(num_logical, num_spares)) - base_peri) / base_peri;
    return r;
}

std::vector<ResourceBreakdown> table1() {
    std::vector<ResourceBreakdown> rows;
    for (int d : {3, 5, 7, 9}) {
        for (int64_t n = 16; n <= 1024; n *= 2) {
            for (int64_t x : {0, 1, 2, 4, 8}) {
                rows.push_back(overhead(d, n, x));
            }
        }
    }
    return rows;
}

}  // namespace qrr

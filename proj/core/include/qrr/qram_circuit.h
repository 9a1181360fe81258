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

#ifndef QRR_QRAM_CIRCUIT_H
#define QRR_QRAM_CIRCUIT_H

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qrr/repair.h"
#include "qrr/statevec.h"

namespace qrr {

/// One bucket-brigade split: child ^= parent AND control; parent ^= child.
/// Afterwards the parent carries the control = 0 branch and the child the
/// control = 1 branch.
struct TreeSplit {
    int parent;
    int child;
    int control;
};

struct NamedRegister {
    std::string name;
    std::vector<int> qubits;
};

/// Statevector index assignment for an n-bit qRAM with X spare cells.
///
/// The original-cell tree is rooted at the |1> ancilla and split on the input
/// address bits; the spare tree is rooted at the RFQ and split on the spare
/// address bits. Roots are split in place, so after routing every tree qubit
/// (roots included) is a leaf and exactly one leaf per basis branch is |1>.
struct QramLayout {
    int address_bits = 0;
    int spare_count = 0;
    int num_qubits = 0;

    std::vector<int> input_address;  // qubit of address bit b at position b
    std::vector<int> spare_address;  // n qubits when X > 0, else empty
    int rfq = -1;
    int one_ancilla = -1;
    std::vector<int> upper_nodes;  // N - 1
    std::vector<int> lower_nodes;  // max(X - 1, 0)
    std::vector<int> memory;       // N original cells
    std::vector<int> spare_memory;  // X spare cells
    int dq = -1;
    int rw = -1;
    int readout = -1;

    std::vector<TreeSplit> upper_splits;
    std::vector<TreeSplit> lower_splits;
    std::vector<int> original_leaf;  // leaf qubit routing to cell a
    std::vector<int> spare_leaf;     // leaf qubit routing to spare s

    int num_cells() const { return 1 << address_bits; }
    int leaf_for(const MemoryLocation &loc) const;
    int cell_for(const MemoryLocation &loc) const;
    std::vector<NamedRegister> registers() const;
    std::string describe() const;
};

/// Throws CapacityExceeded when the layout needs more than kMaxQubits qubits,
/// std::invalid_argument unless 1 <= n <= 3 and 0 <= X <= 2^n.
QramLayout build_layout(int address_bits, int spare_count);

/// Address comparison and replacement. On a basis address a with SA = 0,
/// RFQ = 0 and the ancilla = 1 it leaves RFQ = [a is faulty], SA = the matched
/// spare index, ancilla = NOT RFQ and the input address unchanged.
/// Throws InvalidFat on width mismatch, too many entries, or a spare index >= X.
Circuit build_repair_subcircuit(const QramLayout &layout, const FaultAddressTable &fat);

Circuit build_routing_subcircuit(const QramLayout &layout);

/// Read: MCX(+leaf, +cell, -R/W -> Readout) per leaf. Write: MCX(+leaf, +R/W,
/// +DQ -> cell) per leaf, i.e. a write XORs DQ into the routed cell.
Circuit build_rw_subcircuit(const QramLayout &layout);

enum class QueryMode { Read, Write };

struct QueryAddress {
    bool uniform = false;
    Address value = 0;

    static QueryAddress basis(Address a) { return {false, a}; }
    static QueryAddress superposition() { return {true, 0}; }
};

/// X gates (and H on the address for a uniform query) preparing the input:
/// ancilla |1>, memory contents, R/W, DQ and the address register.
Circuit build_init_subcircuit(const QramLayout &layout, const std::vector<bool> &memory, QueryAddress address,
                              QueryMode mode, bool dq);

struct AddressBranch {
    Address address;
    double probability;        // P(IA = address)
    double readout_one;        // P(Readout = 1 | IA = address)
    double repair_flag;        // P(RFQ = 1 | IA = address), measured after the repair stage
    double spare_routed;       // P(some spare leaf active | IA = address), after routing
    std::vector<double> leaf_activation;  // P(leaf_i = 1 | IA = address), originals then spares
};

struct QueryOutcome {
    double readout_zero = 0.0;
    double readout_one = 0.0;
    std::vector<AddressBranch> branches;  // addresses with nonzero probability, ascending
    /// Cell contents after the query (originals then spares); only for basis addresses.
    std::optional<std::vector<bool>> post_memory;
    double norm_error = 0.0;
    size_t gate_count = 0;
};

/// memory holds N + X classical bits, originals first. Spare cells must already
/// hold the data of the faulty addresses they replace.
QueryOutcome run_query(const QramLayout &layout, const std::vector<bool> &memory, const FaultAddressTable &fat,
                       QueryAddress address, QueryMode mode, bool dq);

/// Classical reference for one basis input: the full basis index expected
/// after the repair stage and after the whole query.
struct ExpectedBasis {
    uint64_t after_repair;
    uint64_t after_query;
};

/// memory_bits packs cell i (originals then spares) at bit i.
ExpectedBasis classical_reference(const QramLayout &layout, const FaultAddressTable &fat, uint64_t memory_bits,
                                  Address address, QueryMode mode, bool dq);

struct VerificationReport {
    int address_bits = 0;
    int spare_count = 0;
    int64_t cases = 0;
    int64_t passed = 0;
    int64_t failed = 0;
    std::optional<std::string> first_counterexample;

    bool ok() const { return failed == 0; }
    /// Throws VerificationFailed carrying the first counterexample.
    void throw_if_failed() const;
};

/// Every fault-address table with up to X entries (all spare assignments),
/// in a fixed order. Used by the exhaustive harness.
std::vector<FaultAddressTable> enumerate_fats(int address_bits, int spare_count);

/// The four stages of one query, in execution order.
struct QueryCircuits {
    Circuit init;
    Circuit repair;
    Circuit routing;
    Circuit rw;

    /// All four stages concatenated.
    Circuit combined() const;
};

QueryCircuits build_query_circuits(const QramLayout &layout, const std::vector<bool> &memory,
                                   const FaultAddressTable &fat, QueryAddress address, QueryMode mode, bool dq);

/// Hook applied to the built stages before they run; lets tests inject
/// semantic bugs into the harness.
using CircuitMutator = std::function<void(QueryCircuits &)>;

/// Exhaustively checks memory contents x FATs x basis addresses x {read,
/// write DQ=0, write DQ=1} against translate_address plus array access. Memory
/// and address are placed in uniform superposition so one statevector run per
/// (FAT, mode) covers every basis input; each input's branch must carry exactly
/// its expected amplitude (to 1e-9) both after the repair stage and at the end.
VerificationReport verify_against_classical(int address_bits, int spare_count, const CircuitMutator &mutator = {});

}  // namespace qrr

#endif  // QRR_QRAM_CIRCUIT_H

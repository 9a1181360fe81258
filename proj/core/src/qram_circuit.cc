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

#include "qrr/qram_circuit.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "qrr/errors.h"

namespace qrr {

namespace {

// Splits `root` on control bits from `bit` downward until each code in
// [lo, lo + count) owns one qubit. Codes are dense, so a bit whose upper half
// is empty needs no split.
void build_sparse_tree(int root, uint32_t lo, uint32_t count, int bit, const std::vector<int> &controls,
                       std::vector<int> &free_nodes, size_t &next_free, std::vector<TreeSplit> &splits,
                       std::vector<int> &leaf) {
    if (count == 1) {
        leaf[lo] = root;
        return;
    }
    const uint32_t half = uint32_t{1} << bit;
    if (count <= half) {
        build_sparse_tree(root, lo, count, bit - 1, controls, free_nodes, next_free, splits, leaf);
        return;
    }
    const int child = free_nodes.at(next_free++);
    splits.push_back({root, child, controls.at(static_cast<size_t>(bit))});
    build_sparse_tree(root, lo, half, bit - 1, controls, free_nodes, next_free, splits, leaf);
    build_sparse_tree(child, lo + half, count - half, bit - 1, controls, free_nodes, next_free, splits, leaf);
}

std::vector<int> take(int &next, int count) {
    std::vector<int> out;
    for (int i = 0; i < count; i++) {
        out.push_back(next++);
    }
    return out;
}

void emit_splits(Circuit &c, const std::vector<TreeSplit> &splits) {
    for (const auto &s : splits) {
        c.append(GateSpec::mcx({pos(s.parent), pos(s.control)}, s.child));
        c.append(GateSpec::mcx({pos(s.child)}, s.parent));
    }
}

std::vector<Control> match_address(const std::vector<int> &address_qubits, Address a) {
    std::vector<Control> controls;
    for (size_t b = 0; b < address_qubits.size(); b++) {
        controls.push_back(((a >> b) & 1u) ? pos(address_qubits[b]) : neg(address_qubits[b]));
    }
    return controls;
}

std::string fat_inline(const FaultAddressTable &fat) {
    std::string out = "{";
    for (size_t i = 0; i < fat.entries().size(); i++) {
        const auto &e = fat.entries()[i];
        out += (i ? ", " : "") + format_address(e.faulty, fat.address_bits()) + "->S" + std::to_string(e.spare);
    }
    return out + "}";
}

}  // namespace

int QramLayout::leaf_for(const MemoryLocation &loc) const {
    return loc.is_spare() ? spare_leaf.at(loc.index) : original_leaf.at(loc.index);
}

int QramLayout::cell_for(const MemoryLocation &loc) const {
    return loc.is_spare() ? spare_memory.at(loc.index) : memory.at(loc.index);
}

std::vector<NamedRegister> QramLayout::registers() const {
    return {
        {"input_address", input_address},
        {"spare_address", spare_address},
        {"rfq", {rfq}},
        {"one_ancilla", {one_ancilla}},
        {"upper_nodes", upper_nodes},
        {"lower_nodes", lower_nodes},
        {"memory", memory},
        {"spare_memory", spare_memory},
        {"dq", {dq}},
        {"rw", {rw}},
        {"readout", {readout}},
    };
}

std::string QramLayout::describe() const {
    std::ostringstream out;
    out << "layout: n=" << address_bits << " N=" << num_cells() << " X=" << spare_count << " qubits=" << num_qubits
        << "\n";
    for (const auto &r : registers()) {
        out << "  " << r.name << ":";
        if (r.qubits.empty()) {
            out << " (empty)";
        }
        for (int q : r.qubits) {
            out << " " << q;
        }
        out << "\n";
    }
    return out.str();
}

QramLayout build_layout(int address_bits, int spare_count) {
    if (address_bits < 1 || address_bits > 3) {
        throw std::invalid_argument("address width must lie in [1, 3], got " + std::to_string(address_bits));
    }
    const int n_cells = 1 << address_bits;
    if (spare_count < 0 || spare_count > n_cells) {
        throw std::invalid_argument("spare count must lie in [0, " + std::to_string(n_cells) + "], got " +
                                    std::to_string(spare_count));
    }
    const int sa_width = spare_count > 0 ? address_bits : 0;
    const int lower = std::max(spare_count - 1, 0);
    const int total =
        address_bits + sa_width + 2 + (n_cells - 1) + lower + n_cells + spare_count + 3;
    if (total > kMaxQubits) {
        throw CapacityExceeded("layout for n=" + std::to_string(address_bits) + ", X=" + std::to_string(spare_count) +
                               " needs " + std::to_string(total) + " qubits, limit is " + std::to_string(kMaxQubits));
    }

    QramLayout l;
    l.address_bits = address_bits;
    l.spare_count = spare_count;
    int next = 0;
    l.input_address = take(next, address_bits);
    l.spare_address = take(next, sa_width);
    l.rfq = next++;
    l.one_ancilla = next++;
    l.upper_nodes = take(next, n_cells - 1);
    l.lower_nodes = take(next, lower);
    l.memory = take(next, n_cells);
    l.spare_memory = take(next, spare_count);
    l.dq = next++;
    l.rw = next++;
    l.readout = next++;
    l.num_qubits = next;

    // Original-cell tree: a full binary tree split level by level, MSB first.
    std::vector<std::pair<int, uint32_t>> active{{l.one_ancilla, 0}};
    size_t next_node = 0;
    for (int b = address_bits - 1; b >= 0; b--) {
        std::vector<std::pair<int, uint32_t>> deeper;
        for (auto [q, prefix] : active) {
            const int child = l.upper_nodes.at(next_node++);
            l.upper_splits.push_back({q, child, l.input_address[static_cast<size_t>(b)]});
            deeper.emplace_back(q, prefix << 1);
            deeper.emplace_back(child, (prefix << 1) | 1u);
        }
        active = std::move(deeper);
    }
    l.original_leaf.assign(static_cast<size_t>(n_cells), -1);
    for (auto [q, prefix] : active) {
        l.original_leaf[prefix] = q;
    }

    // Spare tree: only as many leaves as spares.
    if (spare_count > 0) {
        l.spare_leaf.assign(static_cast<size_t>(spare_count), -1);
        const int width = std::bit_width(static_cast<unsigned>(spare_count - 1));
        size_t next_free = 0;
        build_sparse_tree(l.rfq, 0, static_cast<uint32_t>(spare_count), width - 1, l.spare_address, l.lower_nodes,
                          next_free, l.lower_splits, l.spare_leaf);
    }
    return l;
}

Circuit build_repair_subcircuit(const QramLayout &layout, const FaultAddressTable &fat) {
    if (fat.address_bits() != layout.address_bits) {
        throw InvalidFat("FAT address width " + std::to_string(fat.address_bits()) + " does not match layout width " +
                         std::to_string(layout.address_bits));
    }
    if (static_cast<int>(fat.size()) > layout.spare_count) {
        throw InvalidFat("FAT has " + std::to_string(fat.size()) + " entries but only " +
                         std::to_string(layout.spare_count) + " spares exist");
    }
    Circuit c(layout.num_qubits);
    for (const auto &e : fat.entries()) {
        if (e.spare >= layout.spare_count) {
            throw InvalidFat("spare S" + std::to_string(e.spare) + " does not exist");
        }
        const auto match = match_address(layout.input_address, e.faulty);
        for (size_t b = 0; b < layout.spare_address.size(); b++) {
            if ((static_cast<uint32_t>(e.spare) >> b) & 1u) {
                c.append(GateSpec::mcx(match, layout.spare_address[b]));
            }
        }
        c.append(GateSpec::mcx(match, layout.rfq));
    }
    if (!fat.empty()) {
        c.append(GateSpec::mcx({pos(layout.rfq)}, layout.one_ancilla));
    }
    return c;
}

Circuit build_routing_subcircuit(const QramLayout &layout) {
    Circuit c(layout.num_qubits);
    emit_splits(c, layout.upper_splits);
    emit_splits(c, layout.lower_splits);
    return c;
}

Circuit build_rw_subcircuit(const QramLayout &layout) {
    Circuit c(layout.num_qubits);
    std::vector<std::pair<int, int>> leaves;
    for (size_t i = 0; i < layout.memory.size(); i++) {
        leaves.emplace_back(layout.original_leaf[i], layout.memory[i]);
    }
    for (size_t i = 0; i < layout.spare_memory.size(); i++) {
        leaves.emplace_back(layout.spare_leaf[i], layout.spare_memory[i]);
    }
    for (auto [leaf, cell] : leaves) {
        c.append(GateSpec::mcx({pos(leaf), pos(cell), neg(layout.rw)}, layout.readout));
    }
    for (auto [leaf, cell] : leaves) {
        c.append(GateSpec::mcx({pos(leaf), pos(layout.rw), pos(layout.dq)}, cell));
    }
    return c;
}

Circuit build_init_subcircuit(const QramLayout &layout, const std::vector<bool> &memory, QueryAddress address,
                              QueryMode mode, bool dq) {
    const size_t cells = layout.memory.size() + layout.spare_memory.size();
    if (memory.size() != cells) {
        throw std::invalid_argument("memory has " + std::to_string(memory.size()) + " bits, layout has " +
                                    std::to_string(cells) + " cells");
    }
    if (!address.uniform && address.value >= static_cast<Address>(layout.num_cells())) {
        throw std::invalid_argument("query address " + std::to_string(address.value) + " is out of range");
    }
    Circuit c(layout.num_qubits);
    c.append(GateSpec::x(layout.one_ancilla));
    for (size_t i = 0; i < cells; i++) {
        if (memory[i]) {
            c.append(GateSpec::x(i < layout.memory.size() ? layout.memory[i]
                                                          : layout.spare_memory[i - layout.memory.size()]));
        }
    }
    if (mode == QueryMode::Write) {
        c.append(GateSpec::x(layout.rw));
    }
    if (dq) {
        c.append(GateSpec::x(layout.dq));
    }
    for (size_t b = 0; b < layout.input_address.size(); b++) {
        if (address.uniform) {
            c.append(GateSpec::h(layout.input_address[b]));
        } else if ((address.value >> b) & 1u) {
            c.append(GateSpec::x(layout.input_address[b]));
        }
    }
    return c;
}

Circuit QueryCircuits::combined() const {
    Circuit c(init.num_qubits());
    c.append(init).append(repair).append(routing).append(rw);
    return c;
}

QueryCircuits build_query_circuits(const QramLayout &layout, const std::vector<bool> &memory,
                                   const FaultAddressTable &fat, QueryAddress address, QueryMode mode, bool dq) {
    return {build_init_subcircuit(layout, memory, address, mode, dq), build_repair_subcircuit(layout, fat),
            build_routing_subcircuit(layout), build_rw_subcircuit(layout)};
}

namespace {

uint64_t address_of(uint64_t index, const QramLayout &layout) {
    uint64_t a = 0;
    for (size_t b = 0; b < layout.input_address.size(); b++) {
        a |= ((index >> layout.input_address[b]) & 1u) << b;
    }
    return a;
}

}  // namespace

QueryOutcome run_query(const QramLayout &layout, const std::vector<bool> &memory, const FaultAddressTable &fat,
                       QueryAddress address, QueryMode mode, bool dq) {
    const auto stages = build_query_circuits(layout, memory, fat, address, mode, dq);
    QubitState state(layout.num_qubits);
    state.run(stages.init);
    state.run(stages.repair);

    const size_t n_cells = static_cast<size_t>(layout.num_cells());
    std::vector<double> flag(n_cells, 0.0);
    {
        const auto amps = state.amplitudes();
        for (uint64_t i = 0; i < amps.size(); i++) {
            const double p = std::norm(amps[i]);
            if (p != 0.0 && ((i >> layout.rfq) & 1u)) {
                flag[address_of(i, layout)] += p;
            }
        }
    }

    state.run(stages.routing);
    state.run(stages.rw);

    std::vector<int> leaves = layout.original_leaf;
    leaves.insert(leaves.end(), layout.spare_leaf.begin(), layout.spare_leaf.end());

    QueryOutcome out;
    out.gate_count = stages.init.size() + stages.repair.size() + stages.routing.size() + stages.rw.size();
    std::vector<double> prob(n_cells, 0.0), one(n_cells, 0.0), spare(n_cells, 0.0);
    std::vector<std::vector<double>> leaf_p(n_cells, std::vector<double>(leaves.size(), 0.0));
    const auto amps = state.amplitudes();
    for (uint64_t i = 0; i < amps.size(); i++) {
        const double p = std::norm(amps[i]);
        if (p == 0.0) {
            continue;
        }
        const uint64_t a = address_of(i, layout);
        prob[a] += p;
        if ((i >> layout.readout) & 1u) {
            one[a] += p;
            out.readout_one += p;
        } else {
            out.readout_zero += p;
        }
        bool any_spare = false;
        for (size_t k = 0; k < leaves.size(); k++) {
            if ((i >> leaves[k]) & 1u) {
                leaf_p[a][k] += p;
                any_spare = any_spare || k >= n_cells;
            }
        }
        if (any_spare) {
            spare[a] += p;
        }
    }
    for (size_t a = 0; a < n_cells; a++) {
        if (prob[a] <= 1e-15) {
            continue;
        }
        AddressBranch br{static_cast<Address>(a), prob[a], one[a] / prob[a], flag[a] / prob[a], spare[a] / prob[a],
                         leaf_p[a]};
        for (auto &v : br.leaf_activation) {
            v /= prob[a];
        }
        out.branches.push_back(std::move(br));
    }
    out.norm_error = std::abs(state.norm_squared() - 1.0);

    if (!address.uniform) {
        const auto support = state.support(1e-12);
        if (support.size() == 1) {
            std::vector<bool> post;
            for (int q : layout.memory) {
                post.push_back((support[0] >> q) & 1u);
            }
            for (int q : layout.spare_memory) {
                post.push_back((support[0] >> q) & 1u);
            }
            out.post_memory = std::move(post);
        }
    }
    return out;
}

ExpectedBasis classical_reference(const QramLayout &layout, const FaultAddressTable &fat, uint64_t memory_bits,
                                  Address address, QueryMode mode, bool dq) {
    const auto t = translate_address(fat, address);
    auto set = [](uint64_t &idx, int q, bool v) {
        if (v) {
            idx |= uint64_t{1} << q;
        } else {
            idx &= ~(uint64_t{1} << q);
        }
    };

    uint64_t idx = 0;
    for (size_t b = 0; b < layout.input_address.size(); b++) {
        set(idx, layout.input_address[b], (address >> b) & 1u);
    }
    std::vector<int> cells = layout.memory;
    cells.insert(cells.end(), layout.spare_memory.begin(), layout.spare_memory.end());
    for (size_t i = 0; i < cells.size(); i++) {
        set(idx, cells[i], (memory_bits >> i) & 1u);
    }
    set(idx, layout.rw, mode == QueryMode::Write);
    set(idx, layout.dq, dq);

    ExpectedBasis out{};
    uint64_t repaired = idx;
    if (t.repaired) {
        for (size_t b = 0; b < layout.spare_address.size(); b++) {
            set(repaired, layout.spare_address[b], (t.location.index >> b) & 1u);
        }
    }
    set(repaired, layout.rfq, t.repaired);
    set(repaired, layout.one_ancilla, !t.repaired);
    out.after_repair = repaired;

    uint64_t final_idx = repaired;
    set(final_idx, layout.rfq, false);
    set(final_idx, layout.one_ancilla, false);
    set(final_idx, layout.leaf_for(t.location), true);

    const size_t cell_pos = t.location.is_spare() ? layout.memory.size() + t.location.index : t.location.index;
    const bool cell_value = (memory_bits >> cell_pos) & 1u;
    if (mode == QueryMode::Read) {
        set(final_idx, layout.readout, cell_value);
    } else {
        set(final_idx, layout.cell_for(t.location), cell_value != dq);
    }
    out.after_query = final_idx;
    return out;
}

void VerificationReport::throw_if_failed() const {
    if (!ok()) {
        throw VerificationFailed(first_counterexample.value_or("verification failed"));
    }
}

std::vector<FaultAddressTable> enumerate_fats(int address_bits, int spare_count) {
    const uint32_t n_cells = uint32_t{1} << address_bits;
    std::vector<FaultAddressTable> out;
    // Every subset of faulty addresses up to X, ascending, times every ordered
    // choice of distinct spares.
    for (uint32_t subset = 0; subset < (uint32_t{1} << n_cells); subset++) {
        const int k = std::popcount(subset);
        if (k > spare_count) {
            continue;
        }
        std::vector<Address> faulty;
        for (uint32_t a = 0; a < n_cells; a++) {
            if ((subset >> a) & 1u) {
                faulty.push_back(a);
            }
        }
        std::vector<int> spares(static_cast<size_t>(spare_count));
        for (int s = 0; s < spare_count; s++) {
            spares[static_cast<size_t>(s)] = s;
        }
        // Permutations of all spares, keeping only distinct k-prefixes.
        std::vector<std::vector<int>> prefixes;
        do {
            std::vector<int> prefix(spares.begin(), spares.begin() + k);
            if (std::find(prefixes.begin(), prefixes.end(), prefix) == prefixes.end()) {
                prefixes.push_back(prefix);
            }
        } while (std::next_permutation(spares.begin(), spares.end()));
        for (const auto &prefix : prefixes) {
            std::vector<FatEntry> entries;
            for (int i = 0; i < k; i++) {
                entries.push_back({faulty[static_cast<size_t>(i)], prefix[static_cast<size_t>(i)]});
            }
            out.emplace_back(address_bits, std::move(entries));
        }
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const FaultAddressTable &a, const FaultAddressTable &b) { return a.size() < b.size(); });
    return out;
}

VerificationReport verify_against_classical(int address_bits, int spare_count, const CircuitMutator &mutator) {
    const QramLayout layout = build_layout(address_bits, spare_count);
    VerificationReport report;
    report.address_bits = address_bits;
    report.spare_count = spare_count;

    const size_t cells = layout.memory.size() + layout.spare_memory.size();
    const uint64_t n_memories = uint64_t{1} << cells;
    const uint64_t n_addresses = static_cast<uint64_t>(layout.num_cells());
    const double branch_amp = 1.0 / std::sqrt(static_cast<double>(n_memories * n_addresses));

    struct Mode {
        QueryMode mode;
        bool dq;
        const char *name;
    };
    const Mode modes[] = {{QueryMode::Read, false, "read"},
                          {QueryMode::Write, false, "write(dq=0)"},
                          {QueryMode::Write, true, "write(dq=1)"}};

    for (const auto &fat : enumerate_fats(address_bits, spare_count)) {
        for (const auto &m : modes) {
            auto stages = build_query_circuits(layout, std::vector<bool>(cells, false), fat,
                                               QueryAddress::superposition(), m.mode, m.dq);
            for (int q : layout.memory) {
                stages.init.append(GateSpec::h(q));
            }
            for (int q : layout.spare_memory) {
                stages.init.append(GateSpec::h(q));
            }
            if (mutator) {
                mutator(stages);
            }

            QubitState state(layout.num_qubits);
            state.run(stages.init);
            state.run(stages.repair);
            std::vector<bool> repair_ok(n_memories * n_addresses, true);
            for (uint64_t mem = 0; mem < n_memories; mem++) {
                for (Address a = 0; a < n_addresses; a++) {
                    const auto expect = classical_reference(layout, fat, mem, a, m.mode, m.dq);
                    if (std::abs(state.amplitude(expect.after_repair) - branch_amp) > 1e-9) {
                        repair_ok[mem * n_addresses + a] = false;
                    }
                }
            }
            state.run(stages.routing);
            state.run(stages.rw);
            const bool norm_ok = state.is_normalized(1e-10);

            for (uint64_t mem = 0; mem < n_memories; mem++) {
                for (Address a = 0; a < n_addresses; a++) {
                    report.cases++;
                    const auto expect = classical_reference(layout, fat, mem, a, m.mode, m.dq);
                    const Amplitude got = state.amplitude(expect.after_query);
                    const bool ok = norm_ok && repair_ok[mem * n_addresses + a] && std::abs(got - branch_amp) <= 1e-9;
                    if (ok) {
                        report.passed++;
                        continue;
                    }
                    report.failed++;
                    if (!report.first_counterexample) {
                        std::ostringstream msg;
                        msg << "n=" << address_bits << " X=" << spare_count << " FAT=" << fat_inline(fat)
                            << " mode=" << m.name << " memory=" << basis_string(mem, static_cast<int>(cells))
                            << " address=" << format_address(a, address_bits) << ": ";
                        if (!repair_ok[mem * n_addresses + a]) {
                            msg << "repair stage output mismatch";
                        } else if (!norm_ok) {
                            msg << "norm drifted to " << state.norm_squared();
                        } else {
                            msg << "expected |" << basis_string(expect.after_query, layout.num_qubits)
                                << "> with amplitude " << branch_amp << ", got " << std::abs(got);
                        }
                        report.first_counterexample = msg.str();
                    }
                }
            }
        }
    }
    return report;
}

}  // namespace qrr

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

#include "qrr/statevec.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include "qrr/errors.h"

namespace qrr {

void GateSpec::validate(int num_qubits) const {
    auto check_index = [num_qubits](int q) {
        if (q < 0 || q >= num_qubits) {
            throw IndexOutOfRange("qubit index " + std::to_string(q) + " outside register of " +
                                  std::to_string(num_qubits));
        }
    };
    check_index(target);
    if (kind != GateKind::MCX && !controls.empty()) {
        throw std::invalid_argument("X and H gates take no controls");
    }
    uint64_t seen = 0;
    for (const auto &c : controls) {
        check_index(c.qubit);
        if (c.qubit == target) {
            throw std::invalid_argument("qubit " + std::to_string(target) + " is both target and control");
        }
        const uint64_t bit = uint64_t{1} << c.qubit;
        if (seen & bit) {
            throw std::invalid_argument("control qubit " + std::to_string(c.qubit) + " listed twice");
        }
        seen |= bit;
    }
}

std::string GateSpec::str() const {
    std::string out;
    switch (kind) {
        case GateKind::X:
            out = "X";
            break;
        case GateKind::H:
            out = "H";
            break;
        case GateKind::MCX:
            out = "MCX";
            break;
    }
    out += " target=" + std::to_string(target);
    if (kind == GateKind::MCX) {
        out += " controls=";
        for (size_t i = 0; i < controls.size(); i++) {
            if (i) {
                out += ",";
            }
            out += controls[i].polarity == Polarity::Positive ? "+" : "-";
            out += std::to_string(controls[i].qubit);
        }
    }
    return out;
}

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 0 || num_qubits > kMaxQubits) {
        throw TooManyQubits("circuit width " + std::to_string(num_qubits) + " exceeds " + std::to_string(kMaxQubits));
    }
}

Circuit &Circuit::append(GateSpec gate) {
    gate.validate(num_qubits_);
    gates_.push_back(std::move(gate));
    return *this;
}

Circuit &Circuit::append(const Circuit &other) {
    if (other.num_qubits_ > num_qubits_) {
        throw IndexOutOfRange("appended circuit is wider than the target circuit");
    }
    for (const auto &g : other.gates_) {
        gates_.push_back(g);
    }
    return *this;
}

std::string Circuit::listing() const {
    std::string out;
    for (const auto &g : gates_) {
        out += g.str();
        out += '\n';
    }
    return out;
}

QubitState::QubitState(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 0 || num_qubits > kMaxQubits) {
        throw TooManyQubits("state width " + std::to_string(num_qubits) + " exceeds " + std::to_string(kMaxQubits));
    }
    amps_.assign(size_t{1} << num_qubits, Amplitude{0.0, 0.0});
    amps_[0] = 1.0;
}

QubitState QubitState::from_amplitudes(std::vector<Amplitude> amplitudes) {
    if (amplitudes.empty() || !std::has_single_bit(amplitudes.size())) {
        throw std::invalid_argument("amplitude vector length must be a power of two");
    }
    const int m = std::countr_zero(amplitudes.size());
    if (m > kMaxQubits) {
        throw TooManyQubits("state width " + std::to_string(m) + " exceeds " + std::to_string(kMaxQubits));
    }
    QubitState s;
    s.num_qubits_ = m;
    s.amps_ = std::move(amplitudes);
    return s;
}

double QubitState::norm_squared() const {
    double total = 0.0;
    for (const auto &a : amps_) {
        total += std::norm(a);
    }
    return total;
}

bool QubitState::is_normalized(double tol) const { return std::abs(norm_squared() - 1.0) <= tol; }

std::vector<uint64_t> QubitState::support(double tol) const {
    std::vector<uint64_t> out;
    for (uint64_t i = 0; i < amps_.size(); i++) {
        if (std::norm(amps_[i]) > tol) {
            out.push_back(i);
        }
    }
    return out;
}

void QubitState::apply(const GateSpec &gate) {
    gate.validate(num_qubits_);
    const uint64_t tbit = uint64_t{1} << gate.target;
    const uint64_t size = amps_.size();

    if (gate.kind == GateKind::H) {
        const double r = 1.0 / std::sqrt(2.0);
        for (uint64_t i = 0; i < size; i++) {
            if (i & tbit) {
                continue;
            }
            const Amplitude a = amps_[i];
            const Amplitude b = amps_[i | tbit];
            amps_[i] = (a + b) * r;
            amps_[i | tbit] = (a - b) * r;
        }
        return;
    }

    uint64_t mask = 0;
    uint64_t want = 0;
    for (const auto &c : gate.controls) {
        const uint64_t bit = uint64_t{1} << c.qubit;
        mask |= bit;
        if (c.polarity == Polarity::Positive) {
            want |= bit;
        }
    }
    // Walk only indices with the target bit clear by inserting a zero at the
    // target position of a dense counter.
    const uint64_t low = tbit - 1;
    for (uint64_t k = 0; k < size / 2; k++) {
        const uint64_t i = ((k & ~low) << 1) | (k & low);
        if ((i & mask) == want) {
            std::swap(amps_[i], amps_[i | tbit]);
        }
    }
}

void QubitState::run(const Circuit &circuit) {
    if (circuit.num_qubits() > num_qubits_) {
        throw IndexOutOfRange("circuit is wider than the state");
    }
    for (const auto &g : circuit.gates()) {
        apply(g);
    }
}

QubitState new_state(std::string_view bits) {
    if (bits.size() > static_cast<size_t>(kMaxQubits)) {
        throw TooManyQubits("bit string of length " + std::to_string(bits.size()) + " exceeds " +
                            std::to_string(kMaxQubits) + " qubits");
    }
    const int m = static_cast<int>(bits.size());
    uint64_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("bit string may only contain '0' and '1'");
        }
        index = (index << 1) | static_cast<uint64_t>(c - '0');
    }
    std::vector<Amplitude> amps(size_t{1} << m, Amplitude{0.0, 0.0});
    amps[index] = 1.0;
    return QubitState::from_amplitudes(std::move(amps));
}

double marginal_probability(const QubitState &state, std::span<const BitAssignment> assignment) {
    uint64_t mask = 0;
    uint64_t want = 0;
    for (const auto &a : assignment) {
        if (a.qubit < 0 || a.qubit >= state.num_qubits()) {
            throw IndexOutOfRange("qubit index " + std::to_string(a.qubit) + " outside register");
        }
        const uint64_t bit = uint64_t{1} << a.qubit;
        if ((mask & bit) && (((want & bit) != 0) != a.value)) {
            return 0.0;
        }
        mask |= bit;
        if (a.value) {
            want |= bit;
        }
    }
    const auto amps = state.amplitudes();
    double total = 0.0;
    for (uint64_t i = 0; i < amps.size(); i++) {
        if ((i & mask) == want) {
            total += std::norm(amps[i]);
        }
    }
    return total;
}

std::string basis_string(uint64_t index, int num_qubits) {
    std::string out(static_cast<size_t>(num_qubits), '0');
    for (int q = 0; q < num_qubits; q++) {
        if ((index >> q) & 1u) {
            out[static_cast<size_t>(num_qubits - 1 - q)] = '1';
        }
    }
    return out;
}

std::string sample(const QubitState &state, Xoshiro256 &rng) {
    if (!state.is_normalized(1e-10)) {
        throw NotNormalized("cannot sample a state with squared norm " + std::to_string(state.norm_squared()));
    }
    const auto amps = state.amplitudes();
    const double u = uniform01(rng);
    double acc = 0.0;
    uint64_t last_nonzero = 0;
    for (uint64_t i = 0; i < amps.size(); i++) {
        const double p = std::norm(amps[i]);
        if (p == 0.0) {
            continue;
        }
        last_nonzero = i;
        acc += p;
        if (u < acc) {
            return basis_string(i, state.num_qubits());
        }
    }
    return basis_string(last_nonzero, state.num_qubits());
}

}  // namespace qrr

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

#ifndef QRR_STATEVEC_H
#define QRR_STATEVEC_H

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qrr/random.h"

namespace qrr {

/// Dense statevector simulator for X, H and multi-controlled X.
///
/// Bit order: qubit 0 is the least significant bit of the basis index. Bit
/// strings are written like kets, highest qubit first, so "10" is the basis
/// state with qubit 1 set, index 2.

using Amplitude = std::complex<double>;

inline constexpr int kMaxQubits = 24;

enum class GateKind { X, H, MCX };
enum class Polarity { Positive, Negative };

struct Control {
    int qubit;
    Polarity polarity = Polarity::Positive;

    bool operator==(const Control &) const = default;
};

inline Control pos(int q) { return {q, Polarity::Positive}; }
inline Control neg(int q) { return {q, Polarity::Negative}; }

struct GateSpec {
    GateKind kind;
    int target;
    std::vector<Control> controls;

    static GateSpec x(int target) { return {GateKind::X, target, {}}; }
    static GateSpec h(int target) { return {GateKind::H, target, {}}; }
    static GateSpec mcx(std::vector<Control> controls, int target) { return {GateKind::MCX, target, std::move(controls)}; }

    /// Throws IndexOutOfRange on a bad index and std::invalid_argument when the
    /// target is also a control, a control repeats, or X/H carry controls.
    void validate(int num_qubits) const;

    /// e.g. "MCX target=5 controls=+0,-1"
    std::string str() const;

    bool operator==(const GateSpec &) const = default;
};

class Circuit {
   public:
    explicit Circuit(int num_qubits);

    int num_qubits() const { return num_qubits_; }
    const std::vector<GateSpec> &gates() const { return gates_; }
    size_t size() const { return gates_.size(); }

    /// Validates the gate against num_qubits() before appending.
    Circuit &append(GateSpec gate);
    Circuit &append(const Circuit &other);

    /// One gate per line, as GateSpec::str().
    std::string listing() const;

    /// Mutable access for harness fault injection.
    std::vector<GateSpec> &mutable_gates() { return gates_; }

   private:
    int num_qubits_;
    std::vector<GateSpec> gates_;
};

class QubitState {
   public:
    /// |0...0> on num_qubits qubits. Throws TooManyQubits above kMaxQubits.
    explicit QubitState(int num_qubits);

    /// Takes amplitudes as given; the length must be a power of two. The norm is
    /// not checked here (see is_normalized).
    static QubitState from_amplitudes(std::vector<Amplitude> amplitudes);

    int num_qubits() const { return num_qubits_; }
    std::span<const Amplitude> amplitudes() const { return amps_; }
    Amplitude amplitude(uint64_t index) const { return amps_.at(index); }

    double norm_squared() const;
    bool is_normalized(double tol = 1e-10) const;

    /// Indices whose probability exceeds tol.
    std::vector<uint64_t> support(double tol = 1e-12) const;

    void apply(const GateSpec &gate);
    void run(const Circuit &circuit);

   private:
    QubitState() = default;
    int num_qubits_ = 0;
    std::vector<Amplitude> amps_;
};

/// Computational basis state |bits>. Throws TooManyQubits above kMaxQubits and
/// std::invalid_argument on characters other than '0' and '1'.
QubitState new_state(std::string_view bits);

inline void apply(QubitState &state, const GateSpec &gate) { state.apply(gate); }
inline void run(QubitState &state, const Circuit &circuit) { state.run(circuit); }

struct BitAssignment {
    int qubit;
    bool value;
};

/// Exact probability that every listed qubit reads its assigned value.
double marginal_probability(const QubitState &state, std::span<const BitAssignment> assignment);

/// Draws a basis state with probability |amp|^2 and returns it as a ket string.
/// Throws NotNormalized if the state's norm is off by more than 1e-10.
std::string sample(const QubitState &state, Xoshiro256 &rng);

/// Basis index -> ket string (highest qubit first).
std::string basis_string(uint64_t index, int num_qubits);

}  // namespace qrr

#endif  // QRR_STATEVEC_H

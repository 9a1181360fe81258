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
#include <map>
#include <random>

#include "qrr/errors.h"
#include "qrr/statevec.h"

namespace qrr {
namespace {

using Matrix = std::vector<std::vector<Amplitude>>;

// Dense reference: builds the full 2^m x 2^m matrix of a gate from its definition.
Matrix gate_matrix(const GateSpec &g, int m) {
    const size_t dim = size_t{1} << m;
    Matrix u(dim, std::vector<Amplitude>(dim, 0.0));
    for (size_t col = 0; col < dim; col++) {
        const bool tbit = (col >> g.target) & 1u;
        if (g.kind == GateKind::H) {
            const double r = 1.0 / std::sqrt(2.0);
            const size_t lo = col & ~(size_t{1} << g.target);
            const size_t hi = col | (size_t{1} << g.target);
            u[lo][col] += r;
            u[hi][col] += tbit ? -r : r;
            continue;
        }
        bool fire = true;
        for (const auto &c : g.controls) {
            const bool v = (col >> c.qubit) & 1u;
            fire = fire && (v == (c.polarity == Polarity::Positive));
        }
        u[fire ? col ^ (size_t{1} << g.target) : col][col] = 1.0;
    }
    return u;
}

std::vector<Amplitude> mat_vec(const Matrix &u, const std::vector<Amplitude> &v) {
    std::vector<Amplitude> out(v.size(), 0.0);
    for (size_t r = 0; r < v.size(); r++) {
        for (size_t c = 0; c < v.size(); c++) {
            out[r] += u[r][c] * v[c];
        }
    }
    return out;
}

GateSpec random_gate(std::mt19937_64 &rng, int m) {
    std::uniform_int_distribution<int> kind(0, 2);
    std::uniform_int_distribution<int> qubit(0, m - 1);
    const int target = qubit(rng);
    switch (kind(rng)) {
        case 0:
            return GateSpec::x(target);
        case 1:
            return GateSpec::h(target);
        default: {
            std::vector<Control> controls;
            for (int q = 0; q < m; q++) {
                if (q != target && rng() % 2) {
                    controls.push_back(rng() % 2 ? pos(q) : neg(q));
                }
            }
            return GateSpec::mcx(controls, target);
        }
    }
}

std::vector<Amplitude> random_state(std::mt19937_64 &rng, int m) {
    std::normal_distribution<double> n;
    std::vector<Amplitude> v(size_t{1} << m);
    double norm = 0.0;
    for (auto &a : v) {
        a = {n(rng), n(rng)};
        norm += std::norm(a);
    }
    for (auto &a : v) {
        a /= std::sqrt(norm);
    }
    return v;
}

TEST(Statevec, NewStateIsBasisKetHighestQubitFirst) {
    const auto s = new_state("10");
    EXPECT_EQ(s.num_qubits(), 2);
    EXPECT_EQ(s.amplitude(2), Amplitude(1.0));
    EXPECT_EQ(s.support(), std::vector<uint64_t>{2});
    EXPECT_EQ(basis_string(2, 2), "10");
    EXPECT_EQ(basis_string(1, 3), "001");
    EXPECT_THROW(new_state("12"), std::invalid_argument);
    EXPECT_THROW(new_state(std::string(25, '0')), TooManyQubits);
}

TEST(Statevec, MatchesDenseMatrixOracle) {
    std::mt19937_64 rng(2024);
    for (int m = 1; m <= 4; m++) {
        for (int trial = 0; trial < 50; trial++) {
            auto ref = random_state(rng, m);
            auto state = QubitState::from_amplitudes(ref);
            for (int g = 0; g < 12; g++) {
                const auto gate = random_gate(rng, m);
                state.apply(gate);
                ref = mat_vec(gate_matrix(gate, m), ref);
            }
            for (size_t i = 0; i < ref.size(); i++) {
                EXPECT_NEAR(std::abs(state.amplitude(i) - ref[i]), 0.0, 1e-12);
            }
            EXPECT_NEAR(state.norm_squared(), 1.0, 1e-10);
        }
    }
}

TEST(Statevec, ToffoliTruthTable) {
    for (int in = 0; in < 8; in++) {
        auto s = new_state(basis_string(static_cast<uint64_t>(in), 3));
        s.apply(GateSpec::mcx({pos(0), pos(1)}, 2));
        const int want = (in & 3) == 3 ? in ^ 4 : in;
        EXPECT_EQ(s.support(), std::vector<uint64_t>{static_cast<uint64_t>(want)});
    }
}

TEST(Statevec, NegativeControlsFireOnZero) {
    auto s = new_state("00");
    s.apply(GateSpec::mcx({neg(0)}, 1));
    EXPECT_EQ(basis_string(s.support().at(0), 2), "10");
}

TEST(Statevec, HadamardTwiceIsIdentity) {
    auto s = new_state("101");
    s.apply(GateSpec::h(1));
    EXPECT_NEAR(std::norm(s.amplitude(5)), 0.5, 1e-12);
    s.apply(GateSpec::h(1));
    EXPECT_NEAR(std::abs(s.amplitude(5) - 1.0), 0.0, 1e-12);
}

TEST(Statevec, GateValidation) {
    QubitState s(3);
    EXPECT_THROW(s.apply(GateSpec::x(3)), IndexOutOfRange);
    EXPECT_THROW(s.apply(GateSpec::mcx({pos(-1)}, 0)), IndexOutOfRange);
    EXPECT_THROW(s.apply(GateSpec::mcx({pos(1)}, 1)), std::invalid_argument);
    EXPECT_THROW(s.apply(GateSpec::mcx({pos(1), neg(1)}, 0)), std::invalid_argument);
    EXPECT_THROW(QubitState(kMaxQubits + 1), TooManyQubits);
    Circuit c(2);
    EXPECT_THROW(c.append(GateSpec::h(2)), IndexOutOfRange);
}

TEST(Statevec, MarginalsAndSampling) {
    auto s = new_state("000");
    s.apply(GateSpec::h(0));
    s.apply(GateSpec::mcx({pos(0)}, 2));
    const std::vector<BitAssignment> q0{{0, true}};
    const std::vector<BitAssignment> both{{0, true}, {2, true}};
    const std::vector<BitAssignment> clash{{0, true}, {0, false}};
    EXPECT_NEAR(marginal_probability(s, q0), 0.5, 1e-12);
    EXPECT_NEAR(marginal_probability(s, both), 0.5, 1e-12);
    EXPECT_EQ(marginal_probability(s, clash), 0.0);

    Xoshiro256 rng(5);
    std::map<std::string, int> counts;
    const int shots = 20000;
    for (int i = 0; i < shots; i++) {
        counts[sample(s, rng)]++;
    }
    ASSERT_EQ(counts.size(), 2u);
    const double se = std::sqrt(0.25 / shots);
    EXPECT_NEAR(counts["101"] / static_cast<double>(shots), 0.5, 4 * se);
}

TEST(Statevec, SampleRejectsUnnormalizedState) {
    Xoshiro256 rng(1);
    const auto s = QubitState::from_amplitudes({1.0, 1.0});
    EXPECT_THROW(sample(s, rng), NotNormalized);
    EXPECT_THROW(QubitState::from_amplitudes({1.0, 0.0, 0.0}), std::invalid_argument);
}

TEST(Statevec, CircuitListing) {
    Circuit c(3);
    c.append(GateSpec::x(0)).append(GateSpec::mcx({pos(0), neg(1)}, 2));
    EXPECT_EQ(c.listing(), "X target=0\nMCX target=2 controls=+0,-1\n");
    QubitState s(3);
    s.run(c);
    EXPECT_EQ(basis_string(s.support().at(0), 3), "101");
}

}  // namespace
}  // namespace qrr

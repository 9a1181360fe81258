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

#ifndef QRR_RANDOM_H
#define QRR_RANDOM_H

#include <array>
#include <cstdint>
#include <initializer_list>
#include <limits>

namespace qrr {

/// SplitMix64 step. Used for seeding and for hashing stream coordinates.
uint64_t splitmix64(uint64_t &state);

/// Derives an independent 64-bit seed from a master seed and a path of indices,
/// e.g. derive_seed(master, {point, rep, chip}). Pure; no shared state.
uint64_t derive_seed(uint64_t master, std::initializer_list<uint64_t> path);

/// xoshiro256** generator. Output sequence is fully specified, so a fixed seed
/// reproduces bit-identical draws on every platform.
class Xoshiro256 {
   public:
    using result_type = uint64_t;

    explicit Xoshiro256(uint64_t seed);

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() {
        const uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

   private:
    static constexpr uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    std::array<uint64_t, 4> s_{};
};

/// Uniform double in [0, 1) from the top 53 bits of one draw.
inline double uniform01(Xoshiro256 &rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

/// One Bernoulli(p) trial. p <= 0 never fires, p >= 1 always fires.
inline bool bernoulli(Xoshiro256 &rng, double p) { return uniform01(rng) < p; }

}  // namespace qrr

#endif  // QRR_RANDOM_H

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

#include "qrr/random.h"

namespace qrr {

uint64_t splitmix64(uint64_t &state) {
    uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

uint64_t derive_seed(uint64_t master, std::initializer_list<uint64_t> path) {
    uint64_t state = master;
    uint64_t h = splitmix64(state);
    for (uint64_t index : path) {
        state = h ^ (index + 0x632BE59BD9B4E019ULL);
        h = splitmix64(state);
    }
    return h;
}

Xoshiro256::Xoshiro256(uint64_t seed) {
    uint64_t state = seed;
    for (auto &word : s_) {
        word = splitmix64(state);
    }
}

}  // namespace qrr

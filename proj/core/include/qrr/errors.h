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

#ifndef QRR_ERRORS_H
#define QRR_ERRORS_H

#include <stdexcept>
#include <string>

namespace qrr {

struct InvalidDistance : std::invalid_argument {
    explicit InvalidDistance(int d)
        : std::invalid_argument("code distance must be odd and >= 3, got " + std::to_string(d)) {}
};

struct NotPowerOfTwo : std::invalid_argument {
    explicit NotPowerOfTwo(long long n)
        : std::invalid_argument("expected a power of two >= 2, got " + std::to_string(n)) {}
};

/// The chip has more defective originals than healthy spares and must be discarded.
struct Unrepairable : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct TooManyQubits : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IndexOutOfRange : std::out_of_range {
    using std::out_of_range::out_of_range;
};

struct NotNormalized : std::domain_error {
    using std::domain_error::domain_error;
};

struct CapacityExceeded : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidFat : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct VerificationFailed : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace qrr

#endif  // QRR_ERRORS_H

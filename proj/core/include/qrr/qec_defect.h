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

#ifndef QRR_QEC_DEFECT_H
#define QRR_QEC_DEFECT_H

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qrr/random.h"

namespace qrr {

/// 2d^2 - 1 physical qubits per rotated surface-code patch. Throws InvalidDistance.
int physical_per_logical(int distance);

/// Code distance of a surface-code patch and the quantities derived from it.
class QecParams {
   public:
    /// Throws InvalidDistance unless distance is odd and >= 3.
    explicit QecParams(int distance);

    int distance() const { return distance_; }
    int physical_per_logical() const { return 2 * distance_ * distance_ - 1; }
    /// Number of defective physical qubits the patch tolerates, (d - 1) / 2.
    int correctable() const { return (distance_ - 1) / 2; }

    bool operator==(const QecParams &) const = default;

   private:
    int distance_;
};

/// Per-physical-qubit fabrication defect probability.
class FabricationModel {
   public:
    /// Throws std::invalid_argument unless 0 <= error_rate <= 1.
    explicit FabricationModel(double error_rate);

    double error_rate() const { return error_rate_; }

    bool operator==(const FabricationModel &) const = default;

   private:
    double error_rate_;
};

struct PatchDefectSample {
    int defect_count = 0;
    bool defective = false;
};

/// Draws one Bernoulli(p) per physical qubit, in site-id order. Entry i is true
/// when physical qubit i is broken.
std::vector<bool> sample_patch_mask(const QecParams &params, const FabricationModel &model, Xoshiro256 &rng);

/// Same draw sequence as sample_patch_mask, reduced to a count. The patch is
/// defective when the count exceeds params.correctable().
PatchDefectSample sample_patch(const QecParams &params, const FabricationModel &model, Xoshiro256 &rng);

/// Probability that a patch is defective: the upper binomial tail
/// P(Binomial(2d^2 - 1, p) > (d - 1) / 2).
double logical_defect_prob(const QecParams &params, const FabricationModel &model);

/// Binomial pmf C(n,k) p^k (1-p)^(n-k). Log-space coefficients when n >= 100.
double binomial_pmf(int n, int k, double p);

/// P(Binomial(n, p) <= k).
double binomial_cdf(int n, int k, double p);

enum class StabilizerKind { X, Z };

struct Stabilizer {
    int ancilla;  // site id of the measuring ancilla; also the stabilizer id
    StabilizerKind kind;
    std::vector<int> data;  // site ids of the supporting data qubits
};

struct SiteCoord {
    int x;
    int y;
};

/// Rotated surface code: d^2 data sites (ids 0 .. d^2-1, row-major) and d^2-1
/// ancilla sites (ids d^2 .. 2d^2-2). Coordinates are doubled so data sites sit
/// at odd (x, y) and ancillas at even (x, y). X-type boundaries run along the
/// top and bottom, Z-type along the left and right.
///
/// The layout is used for reporting only; whether a patch is defective is
/// decided by the defect count alone.
class SurfaceCodeLayout {
   public:
    explicit SurfaceCodeLayout(int distance);

    int distance() const { return distance_; }
    size_t num_sites() const { return coords_.size(); }
    std::vector<int> data_sites() const;
    std::vector<int> ancilla_sites() const;
    const std::vector<Stabilizer> &stabilizers() const { return stabilizers_; }
    SiteCoord coord(int site) const { return coords_.at(static_cast<size_t>(site)); }
    bool is_data(int site) const { return site < distance_ * distance_; }

    const std::vector<bool> &defect_mask() const { return mask_; }
    /// Throws std::invalid_argument if mask.size() != num_sites().
    void set_defect_mask(std::vector<bool> mask);

   private:
    int distance_;
    std::vector<SiteCoord> coords_;
    std::vector<Stabilizer> stabilizers_;
    std::vector<bool> mask_;
};

struct DisabledComponents {
    std::vector<int> sites;        // masked site ids, ascending
    std::vector<int> stabilizers;  // ancilla ids of stabilizers touching a masked site, ascending

    bool operator==(const DisabledComponents &) const = default;
};

DisabledComponents disabled_components(const SurfaceCodeLayout &layout);

}  // namespace qrr

#endif  // QRR_QEC_DEFECT_H

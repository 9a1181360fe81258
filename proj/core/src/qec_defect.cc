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

#include "qrr/qec_defect.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qrr/errors.h"

namespace qrr {

int physical_per_logical(int distance) { return QecParams(distance).physical_per_logical(); }

QecParams::QecParams(int distance) : distance_(distance) {
    if (distance < 3 || distance % 2 == 0) {
        throw InvalidDistance(distance);
    }
}

FabricationModel::FabricationModel(double error_rate) : error_rate_(error_rate) {
    if (!(error_rate >= 0.0 && error_rate <= 1.0)) {
        throw std::invalid_argument("fabrication error rate must lie in [0, 1], got " + std::to_string(error_rate));
    }
}

std::vector<bool> sample_patch_mask(const QecParams &params, const FabricationModel &model, Xoshiro256 &rng) {
    const int n = params.physical_per_logical();
    std::vector<bool> mask(static_cast<size_t>(n));
    for (int i = 0; i < n; i++) {
        mask[static_cast<size_t>(i)] = bernoulli(rng, model.error_rate());
    }
    return mask;
}

PatchDefectSample sample_patch(const QecParams &params, const FabricationModel &model, Xoshiro256 &rng) {
    const int n = params.physical_per_logical();
    const double p = model.error_rate();
    int count = 0;
    for (int i = 0; i < n; i++) {
        count += bernoulli(rng, p) ? 1 : 0;
    }
    return {count, count > params.correctable()};
}

namespace {

double log_choose(int n, int k) {
    return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

double choose(int n, int k) {
    k = std::min(k, n - k);
    double c = 1.0;
    for (int i = 1; i <= k; i++) {
        c = c * (n - k + i) / i;
    }
    return c;
}

}  // namespace

double binomial_pmf(int n, int k, double p) {
    if (k < 0 || k > n) {
        return 0.0;
    }
    if (p <= 0.0) {
        return k == 0 ? 1.0 : 0.0;
    }
    if (p >= 1.0) {
        return k == n ? 1.0 : 0.0;
    }
    if (n >= 100) {
        return std::exp(log_choose(n, k) + k * std::log(p) + (n - k) * std::log1p(-p));
    }
    return choose(n, k) * std::pow(p, k) * std::pow(1.0 - p, n - k);
}

double binomial_cdf(int n, int k, double p) {
    if (k < 0) {
        return 0.0;
    }
    if (k >= n) {
        return 1.0;
    }
    double total = 0.0;
    for (int i = 0; i <= k; i++) {
        total += binomial_pmf(n, i, p);
    }
    return std::min(total, 1.0);
}

double logical_defect_prob(const QecParams &params, const FabricationModel &model) {
    const int n = params.physical_per_logical();
    double tail = 0.0;
    for (int k = params.correctable() + 1; k <= n; k++) {
        tail += binomial_pmf(n, k, model.error_rate());
    }
    return std::clamp(tail, 0.0, 1.0);
}

SurfaceCodeLayout::SurfaceCodeLayout(int distance) : distance_(QecParams(distance).distance()) {
    const int d = distance_;
    coords_.reserve(static_cast<size_t>(2 * d * d - 1));
    for (int row = 0; row < d; row++) {
        for (int col = 0; col < d; col++) {
            coords_.push_back({2 * col + 1, 2 * row + 1});
        }
    }
    auto data_at = [d](int x, int y) { return ((y - 1) / 2) * d + (x - 1) / 2; };

    for (int j = 0; j <= d; j++) {
        for (int i = 0; i <= d; i++) {
            const bool bulk = i > 0 && i < d && j > 0 && j < d;
            const auto kind = (i + j) % 2 == 0 ? StabilizerKind::X : StabilizerKind::Z;
            const bool horizontal_edge = (j == 0 || j == d) && i > 0 && i < d;
            const bool vertical_edge = (i == 0 || i == d) && j > 0 && j < d;
            const bool keep = bulk || (horizontal_edge && kind == StabilizerKind::X) ||
                              (vertical_edge && kind == StabilizerKind::Z);
            if (!keep) {
                continue;
            }
            Stabilizer s{static_cast<int>(coords_.size()), kind, {}};
            coords_.push_back({2 * i, 2 * j});
            for (int dy : {-1, 1}) {
                for (int dx : {-1, 1}) {
                    const int x = 2 * i + dx;
                    const int y = 2 * j + dy;
                    if (x > 0 && x < 2 * d && y > 0 && y < 2 * d) {
                        s.data.push_back(data_at(x, y));
                    }
                }
            }
            std::sort(s.data.begin(), s.data.end());
            stabilizers_.push_back(std::move(s));
        }
    }
    mask_.assign(coords_.size(), false);
}

std::vector<int> SurfaceCodeLayout::data_sites() const {
    std::vector<int> out;
    for (int i = 0; i < distance_ * distance_; i++) {
        out.push_back(i);
    }
    return out;
}

std::vector<int> SurfaceCodeLayout::ancilla_sites() const {
    std::vector<int> out;
    for (int i = distance_ * distance_; i < static_cast<int>(coords_.size()); i++) {
        out.push_back(i);
    }
    return out;
}

void SurfaceCodeLayout::set_defect_mask(std::vector<bool> mask) {
    if (mask.size() != coords_.size()) {
        throw std::invalid_argument("defect mask has " + std::to_string(mask.size()) + " entries, layout has " +
                                    std::to_string(coords_.size()) + " sites");
    }
    mask_ = std::move(mask);
}

DisabledComponents disabled_components(const SurfaceCodeLayout &layout) {
    DisabledComponents out;
    const auto &mask = layout.defect_mask();
    for (size_t i = 0; i < mask.size(); i++) {
        if (mask[i]) {
            out.sites.push_back(static_cast<int>(i));
        }
    }
    for (const auto &s : layout.stabilizers()) {
        bool hit = mask[static_cast<size_t>(s.ancilla)];
        for (int q : s.data) {
            hit = hit || mask[static_cast<size_t>(q)];
        }
        if (hit) {
            out.stabilizers.push_back(s.ancilla);
        }
    }
    std::sort(out.stabilizers.begin(), out.stabilizers.end());
    return out;
}

}  // namespace qrr

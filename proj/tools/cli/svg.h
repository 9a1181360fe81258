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

#ifndef QRR_CLI_SVG_H
#define QRR_CLI_SVG_H

#include <string>
#include <vector>

#include "qrr/yield_engine.h"

namespace qrr::cli {

/// Yield vs number of logical qubits, one polyline per (d, X, p) series.
/// Each data point is a <circle> carrying data-d, data-n, data-x, data-p and
/// data-yield attributes.
std::string render_line_chart(const std::vector<YieldReport> &rows, const std::string &title);

/// Color-mapped grid (columns: N, rows: error rate), one panel per (d, X).
/// Each cell is a <rect> with the same data-* attributes as the line chart.
std::string render_heatmap(const std::vector<YieldReport> &rows, const std::string &title);

}  // namespace qrr::cli

#endif  // QRR_CLI_SVG_H

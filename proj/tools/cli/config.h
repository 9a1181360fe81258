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

#ifndef QRR_CLI_CONFIG_H
#define QRR_CLI_CONFIG_H

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qrr/yield_engine.h"

namespace qrr::cli {

/// Bad configuration value or syntax; maps to exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Unreadable input or unwritable output; maps to exit code 3.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ChartKind { Auto, Line, Heatmap };

struct RunConfig {
    std::string command;

    // [sweep]
    std::string preset;
    std::vector<int> distances{3};
    std::vector<int> logical_counts{16, 32, 64, 128, 256, 512, 1024};
    std::vector<int> spare_counts{0};
    std::vector<double> error_rates{0.005, 0.006, 0.007, 0.008, 0.009, 0.010};
    int chips_per_rep = 1000;
    int reps = 10;
    uint64_t master_seed = 20240101;
    bool spares_fallible = true;

    // [output]
    std::string csv_path = "-";
    std::string svg_path;
    ChartKind chart = ChartKind::Auto;
    bool literal_mem = false;

    // [circuit]
    int address_bits = 2;
    std::optional<int> spares;
    std::vector<std::string> faults;
    std::vector<int> defective_spares;
    std::string data;
    std::string spare_data;
    std::string query = "uniform";
    std::string mode = "read";
    int dq = 0;
    std::string fat_in;   // load the FAT from this file instead of building it
    std::string fat_out;  // write the FAT used to this file

    // [verify]
    int max_address_bits = 2;
    int max_spares = 2;
    int mc_points = 20;
    int mc_chips_per_rep = 1000;
    int mc_reps = 10;

    bool operator==(const RunConfig &) const = default;
};

/// Parses `key = value` lines grouped under `[section]` headers into cfg.
/// Unknown keys, malformed lines and bad values throw ConfigError.
void apply_config_text(RunConfig &cfg, std::string_view text);

/// Emits every field in the format apply_config_text reads back.
std::string dump_config(const RunConfig &cfg);

/// Range checks shared by all commands. Throws ConfigError.
void validate(const RunConfig &cfg);

/// Sweep points for yield: the preset's grid when one is set, otherwise the
/// Cartesian product of the axis lists. Throws ConfigError on unknown preset.
std::vector<SweepPoint> sweep_points_for(const RunConfig &cfg);

/// Names accepted by --preset.
const std::vector<std::string> &preset_names();

/// "3,5,7" -> {3,5,7}. Throws ConfigError.
std::vector<int> parse_int_list(std::string_view s);
std::vector<double> parse_double_list(std::string_view s);
std::vector<std::string> parse_string_list(std::string_view s);

/// Shortest decimal that round-trips through parse_double_list.
std::string format_double(double v);
/// Fixed-point with the given number of decimals.
std::string fixed(double v, int decimals);

}  // namespace qrr::cli

#endif  // QRR_CLI_CONFIG_H

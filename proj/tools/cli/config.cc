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

#include "config.h"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <map>
#include <sstream>

namespace qrr::cli {

namespace {

std::string_view trim(std::string_view s) {
    const auto ws = " \t\r";
    const size_t b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) {
        return {};
    }
    const size_t e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

template <typename T>
T parse_number(std::string_view s, const char *what) {
    s = trim(s);
    T v{};
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw ConfigError(std::string("invalid ") + what + ": '" + std::string(s) + "'");
    }
    return v;
}

bool parse_bool(std::string_view s) {
    s = trim(s);
    if (s == "true" || s == "1" || s == "yes" || s == "on") {
        return true;
    }
    if (s == "false" || s == "0" || s == "no" || s == "off") {
        return false;
    }
    throw ConfigError("invalid boolean: '" + std::string(s) + "'");
}

template <typename T>
std::string join(const std::vector<T> &values) {
    std::string out;
    for (size_t i = 0; i < values.size(); i++) {
        if (i) {
            out += ",";
        }
        if constexpr (std::is_same_v<T, double>) {
            out += format_double(values[i]);
        } else if constexpr (std::is_same_v<T, std::string>) {
            out += values[i];
        } else {
            out += std::to_string(values[i]);
        }
    }
    return out;
}

std::string chart_name(ChartKind k) {
    switch (k) {
        case ChartKind::Line:
            return "line";
        case ChartKind::Heatmap:
            return "heatmap";
        default:
            return "auto";
    }
}

ChartKind parse_chart(std::string_view s) {
    s = trim(s);
    if (s == "auto") {
        return ChartKind::Auto;
    }
    if (s == "line") {
        return ChartKind::Line;
    }
    if (s == "heatmap") {
        return ChartKind::Heatmap;
    }
    throw ConfigError("unknown chart kind '" + std::string(s) + "' (expected auto, line or heatmap)");
}

const std::vector<int> kGridSizes{16, 32, 64, 128, 256, 512, 1024};
const std::vector<double> kGridRates{0.005, 0.006, 0.007, 0.008, 0.009, 0.010};

std::vector<SweepPoint> product(const std::vector<int> &ds, const std::vector<int> &ns, const std::vector<int> &xs,
                                const std::vector<double> &ps) {
    std::vector<SweepPoint> out;
    for (int d : ds) {
        for (int n : ns) {
            for (int x : xs) {
                for (double p : ps) {
                    out.push_back({d, n, x, p});
                }
            }
        }
    }
    return out;
}

}  // namespace

std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

std::string fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    return buf;
}

std::vector<int> parse_int_list(std::string_view s) {
    std::vector<int> out;
    for (const auto &item : parse_string_list(s)) {
        out.push_back(parse_number<int>(item, "integer"));
    }
    return out;
}

std::vector<double> parse_double_list(std::string_view s) {
    std::vector<double> out;
    for (const auto &item : parse_string_list(s)) {
        out.push_back(parse_number<double>(item, "number"));
    }
    return out;
}

std::vector<std::string> parse_string_list(std::string_view s) {
    std::vector<std::string> out;
    s = trim(s);
    if (s.empty()) {
        return out;
    }
    while (true) {
        const size_t comma = s.find(',');
        const auto item = trim(s.substr(0, comma));
        if (item.empty()) {
            throw ConfigError("empty entry in list");
        }
        out.emplace_back(item);
        if (comma == std::string_view::npos) {
            break;
        }
        s = s.substr(comma + 1);
    }
    return out;
}

const std::vector<std::string> &preset_names() {
    static const std::vector<std::string> names{"fig3b", "fig6",  "fig7a", "fig7b",
                                                "fig7c", "fig7d", "fig7e", "table1"};
    return names;
}

void apply_config_text(RunConfig &cfg, std::string_view text) {
    std::string section;
    size_t line_no = 0;
    while (!text.empty()) {
        const size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        line_no++;
        if (const size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto where = "line " + std::to_string(line_no) + ": ";
        if (line.front() == '[') {
            if (line.back() != ']') {
                throw ConfigError(where + "unterminated section header");
            }
            section = std::string(trim(line.substr(1, line.size() - 2)));
            continue;
        }
        const size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ConfigError(where + "expected 'key = value'");
        }
        const std::string key(trim(line.substr(0, eq)));
        const auto value = trim(line.substr(eq + 1));
        const std::string qualified = section.empty() ? key : section + "." + key;

        try {
            if (qualified == "command") {
                cfg.command = std::string(value);
            } else if (qualified == "sweep.preset") {
                cfg.preset = std::string(value);
            } else if (qualified == "sweep.distances") {
                cfg.distances = parse_int_list(value);
            } else if (qualified == "sweep.logical_counts") {
                cfg.logical_counts = parse_int_list(value);
            } else if (qualified == "sweep.spare_counts") {
                cfg.spare_counts = parse_int_list(value);
            } else if (qualified == "sweep.error_rates") {
                cfg.error_rates = parse_double_list(value);
            } else if (qualified == "sweep.chips_per_rep") {
                cfg.chips_per_rep = parse_number<int>(value, "integer");
            } else if (qualified == "sweep.reps") {
                cfg.reps = parse_number<int>(value, "integer");
            } else if (qualified == "sweep.master_seed") {
                cfg.master_seed = parse_number<uint64_t>(value, "seed");
            } else if (qualified == "sweep.spares_fallible") {
                cfg.spares_fallible = parse_bool(value);
            } else if (qualified == "output.csv") {
                cfg.csv_path = std::string(value);
            } else if (qualified == "output.svg") {
                cfg.svg_path = std::string(value);
            } else if (qualified == "output.chart") {
                cfg.chart = parse_chart(value);
            } else if (qualified == "output.literal_mem") {
                cfg.literal_mem = parse_bool(value);
            } else if (qualified == "circuit.address_bits") {
                cfg.address_bits = parse_number<int>(value, "integer");
            } else if (qualified == "circuit.spares") {
                if (value.empty()) {
                    cfg.spares.reset();
                } else {
                    cfg.spares = parse_number<int>(value, "integer");
                }
            } else if (qualified == "circuit.faults") {
                cfg.faults = parse_string_list(value);
            } else if (qualified == "circuit.defective_spares") {
                cfg.defective_spares = parse_int_list(value);
            } else if (qualified == "circuit.data") {
                cfg.data = std::string(value);
            } else if (qualified == "circuit.spare_data") {
                cfg.spare_data = std::string(value);
            } else if (qualified == "circuit.query") {
                cfg.query = std::string(value);
            } else if (qualified == "circuit.mode") {
                cfg.mode = std::string(value);
            } else if (qualified == "circuit.dq") {
                cfg.dq = parse_number<int>(value, "integer");
            } else if (qualified == "circuit.fat_in") {
                cfg.fat_in = std::string(value);
            } else if (qualified == "circuit.fat_out") {
                cfg.fat_out = std::string(value);
            } else if (qualified == "verify.max_address_bits") {
                cfg.max_address_bits = parse_number<int>(value, "integer");
            } else if (qualified == "verify.max_spares") {
                cfg.max_spares = parse_number<int>(value, "integer");
            } else if (qualified == "verify.mc_points") {
                cfg.mc_points = parse_number<int>(value, "integer");
            } else if (qualified == "verify.mc_chips_per_rep") {
                cfg.mc_chips_per_rep = parse_number<int>(value, "integer");
            } else if (qualified == "verify.mc_reps") {
                cfg.mc_reps = parse_number<int>(value, "integer");
            } else {
                throw ConfigError("unknown key '" + qualified + "'");
            }
        } catch (const ConfigError &e) {
            throw ConfigError(where + e.what());
        }
    }
}

std::string dump_config(const RunConfig &cfg) {
    std::ostringstream out;
    out << "command = " << cfg.command << "\n\n";
    out << "[sweep]\n";
    out << "preset = " << cfg.preset << "\n";
    out << "distances = " << join(cfg.distances) << "\n";
    out << "logical_counts = " << join(cfg.logical_counts) << "\n";
    out << "spare_counts = " << join(cfg.spare_counts) << "\n";
    out << "error_rates = " << join(cfg.error_rates) << "\n";
    out << "chips_per_rep = " << cfg.chips_per_rep << "\n";
    out << "reps = " << cfg.reps << "\n";
    out << "master_seed = " << cfg.master_seed << "\n";
    out << "spares_fallible = " << (cfg.spares_fallible ? "true" : "false") << "\n\n";
    out << "[output]\n";
    out << "csv = " << cfg.csv_path << "\n";
    out << "svg = " << cfg.svg_path << "\n";
    out << "chart = " << chart_name(cfg.chart) << "\n";
    out << "literal_mem = " << (cfg.literal_mem ? "true" : "false") << "\n\n";
    out << "[circuit]\n";
    out << "address_bits = " << cfg.address_bits << "\n";
    out << "spares = " << (cfg.spares ? std::to_string(*cfg.spares) : "") << "\n";
    out << "faults = " << join(cfg.faults) << "\n";
    out << "defective_spares = " << join(cfg.defective_spares) << "\n";
    out << "data = " << cfg.data << "\n";
    out << "spare_data = " << cfg.spare_data << "\n";
    out << "query = " << cfg.query << "\n";
    out << "mode = " << cfg.mode << "\n";
    out << "dq = " << cfg.dq << "\n";
    out << "fat_in = " << cfg.fat_in << "\n";
    out << "fat_out = " << cfg.fat_out << "\n\n";
    out << "[verify]\n";
    out << "max_address_bits = " << cfg.max_address_bits << "\n";
    out << "max_spares = " << cfg.max_spares << "\n";
    out << "mc_points = " << cfg.mc_points << "\n";
    out << "mc_chips_per_rep = " << cfg.mc_chips_per_rep << "\n";
    out << "mc_reps = " << cfg.mc_reps << "\n";
    return out.str();
}

void validate(const RunConfig &cfg) {
    if (!cfg.preset.empty() &&
        std::find(preset_names().begin(), preset_names().end(), cfg.preset) == preset_names().end()) {
        throw ConfigError("unknown preset '" + cfg.preset + "'");
    }
    if (cfg.distances.empty() || cfg.logical_counts.empty() || cfg.spare_counts.empty() || cfg.error_rates.empty()) {
        throw ConfigError("sweep axes must not be empty");
    }
    for (int d : cfg.distances) {
        if (d < 3 || d % 2 == 0) {
            throw ConfigError("code distance must be odd and >= 3, got " + std::to_string(d));
        }
    }
    for (int n : cfg.logical_counts) {
        if (n < 1) {
            throw ConfigError("logical count must be >= 1, got " + std::to_string(n));
        }
    }
    for (int x : cfg.spare_counts) {
        if (x < 0) {
            throw ConfigError("spare count must be >= 0, got " + std::to_string(x));
        }
    }
    for (double p : cfg.error_rates) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw ConfigError("error rate must lie in [0, 1], got " + format_double(p));
        }
    }
    if (cfg.chips_per_rep < 1 || cfg.reps < 1) {
        throw ConfigError("chips_per_rep and reps must be >= 1");
    }
    if (cfg.mode != "read" && cfg.mode != "write") {
        throw ConfigError("mode must be 'read' or 'write', got '" + cfg.mode + "'");
    }
    if (cfg.dq != 0 && cfg.dq != 1) {
        throw ConfigError("dq must be 0 or 1");
    }
    if (cfg.max_address_bits < 0 || cfg.max_address_bits > 2 || cfg.max_spares < 0 || cfg.max_spares > 2) {
        throw ConfigError("verify scope is limited to max_address_bits <= 2 and max_spares <= 2");
    }
    if (cfg.mc_points < 0 || cfg.mc_chips_per_rep < 1 || cfg.mc_reps < 1) {
        throw ConfigError("invalid Monte-Carlo verification settings");
    }
}

std::vector<SweepPoint> sweep_points_for(const RunConfig &cfg) {
    if (cfg.preset.empty()) {
        return product(cfg.distances, cfg.logical_counts, cfg.spare_counts, cfg.error_rates);
    }
    if (cfg.preset == "fig3b") {
        return product({3}, kGridSizes, {0}, {0.005});
    }
    if (cfg.preset == "fig6") {
        auto pts = product({3, 5, 7, 9}, kGridSizes, {0}, {0.005});
        const auto rr = product({3}, kGridSizes, {8}, {0.005});
        pts.insert(pts.end(), rr.begin(), rr.end());
        return pts;
    }
    static const std::map<std::string, int> fig7{
        {"fig7a", 0}, {"fig7b", 1}, {"fig7c", 2}, {"fig7d", 4}, {"fig7e", 8}};
    if (auto it = fig7.find(cfg.preset); it != fig7.end()) {
        return product({3}, kGridSizes, {it->second}, kGridRates);
    }
    if (cfg.preset == "table1") {
        return product({3, 5, 7, 9}, kGridSizes, {0, 1, 2, 4, 8}, cfg.error_rates);
    }
    throw ConfigError("unknown preset '" + cfg.preset + "'");
}

}  // namespace qrr::cli

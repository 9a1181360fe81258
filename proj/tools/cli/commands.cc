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

#include "commands.h"

#include <CLI11.hpp>
#include <cmath>
#include <deque>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <map>
#include <sstream>

#include "qrr/errors.h"
#include "qrr/qram_circuit.h"
#include "qrr/repair.h"
#include "svg.h"

namespace qrr::cli {

namespace {

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string &path, const std::string &content) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw IoError("cannot write '" + path + "'");
    }
    f << content;
    f.flush();
    if (!f) {
        throw IoError("failed while writing '" + path + "'");
    }
}

void emit(const std::string &path, const std::string &content, std::ostream &out) {
    if (path.empty() || path == "-") {
        out << content;
    } else {
        write_file(path, content);
    }
}

std::vector<bool> parse_bits(const std::string &bits, size_t expected, const char *what) {
    if (bits.size() != expected) {
        throw ConfigError(std::string(what) + " must have " + std::to_string(expected) + " bits, got '" + bits + "'");
    }
    std::vector<bool> out;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw ConfigError(std::string(what) + " must be binary, got '" + bits + "'");
        }
        out.push_back(c == '1');
    }
    return out;
}

std::string bits_string(const std::vector<bool> &bits) {
    std::string s;
    for (bool b : bits) {
        s += b ? '1' : '0';
    }
    return s;
}

Address parse_cli_address(const std::string &s, int width) {
    try {
        return parse_address(s, width);
    } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
    }
}

}  // namespace

std::string yield_csv(const std::vector<YieldReport> &rows) {
    std::string out = std::string(kYieldCsvHeader) + "\n";
    for (const auto &r : rows) {
        out += std::to_string(r.spec.qec.distance()) + "," + std::to_string(r.spec.num_logical) + "," +
               std::to_string(r.spec.num_spares) + "," + fixed(r.spec.fab.error_rate(), 6) + "," +
               std::to_string(r.chips_per_rep) + "," + std::to_string(r.reps) + "," + fixed(r.yield_mean_pct, 2) +
               "," + fixed(r.yield_std_pct, 2) + "," + fixed(r.analytic_pct, 2) + "," +
               std::to_string(r.master_seed) + "\n";
    }
    return out;
}

std::string resource_csv(const std::vector<ResourceBreakdown> &rows, bool literal_mem) {
    std::string out = kResourceCsvHeader;
    out += literal_mem ? ",mem_qubits_literal\n" : "\n";
    for (const auto &r : rows) {
        out += std::to_string(r.distance) + "," + std::to_string(r.num_logical) + "," + std::to_string(r.num_spares) +
               "," + std::to_string(r.mem_qubits) + "," + std::to_string(r.peri_qubits) + "," +
               std::to_string(r.total) + "," + fixed(r.mem_overhead_pct, 2) + "," + fixed(r.peri_overhead_pct, 2);
        if (literal_mem) {
            out += "," + std::to_string(mem_qubits_literal(r.distance, r.num_logical, r.num_spares));
        }
        out += "\n";
    }
    return out;
}

int cmd_yield(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    validate(cfg);
    const auto reports =
        sweep_points(sweep_points_for(cfg), cfg.chips_per_rep, cfg.reps, cfg.master_seed, cfg.spares_fallible);
    emit(cfg.csv_path, yield_csv(reports), out);
    if (!cfg.svg_path.empty()) {
        ChartKind kind = cfg.chart;
        if (kind == ChartKind::Auto) {
            kind = cfg.preset.rfind("fig7", 0) == 0 ? ChartKind::Heatmap : ChartKind::Line;
        }
        const std::string title = cfg.preset.empty() ? "qRAM yield" : "qRAM yield (" + cfg.preset + ")";
        write_file(cfg.svg_path,
                   kind == ChartKind::Heatmap ? render_heatmap(reports, title) : render_line_chart(reports, title));
        err << "wrote " << cfg.svg_path << "\n";
    }
    return kExitOk;
}

int cmd_resource(const RunConfig &cfg, std::ostream &out, std::ostream &) {
    validate(cfg);
    std::vector<std::tuple<int, int, int>> keys;
    for (const auto &p : sweep_points_for(cfg)) {
        keys.emplace_back(p.distance, p.num_logical, p.num_spares);
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    std::vector<ResourceBreakdown> rows;
    for (const auto &[d, n, x] : keys) {
        try {
            rows.push_back(overhead(d, n, x));
        } catch (const std::invalid_argument &e) {
            throw ConfigError(e.what());
        }
    }
    emit(cfg.csv_path, resource_csv(rows, cfg.literal_mem), out);
    return kExitOk;
}

int cmd_circuit_demo(const RunConfig &cfg, std::ostream &out, std::ostream &err, bool inject_bug) {
    validate(cfg);
    const int n = cfg.address_bits;
    if (n < 1 || n > 3) {
        throw ConfigError("address_bits must lie in [1, 3]");
    }
    const size_t n_cells = size_t{1} << n;

    std::vector<Address> faulty;
    for (const auto &f : cfg.faults) {
        faulty.push_back(parse_cli_address(f, n));
    }
    int spares = static_cast<int>(faulty.size());
    if (cfg.spares) {
        spares = *cfg.spares;
    } else if (!cfg.spare_data.empty()) {
        spares = static_cast<int>(cfg.spare_data.size());
    }
    if (spares < 0 || static_cast<size_t>(spares) > n_cells) {
        throw ConfigError("spares must lie in [0, " + std::to_string(n_cells) + "]");
    }

    FaultAddressTable fat(n);
    if (!cfg.fat_in.empty()) {
        try {
            fat = FaultAddressTable::from_text(read_file(cfg.fat_in), n);
        } catch (const InvalidFat &e) {
            throw ConfigError(e.what());
        }
    } else {
        try {
            fat = build_fat(DefectMap(n, faulty, cfg.defective_spares), spares);
        } catch (const Unrepairable &e) {
            err << "Unrepairable: " << e.what() << "; the chip must be discarded\n";
            return kExitConfig;
        } catch (const std::invalid_argument &e) {
            throw ConfigError(e.what());
        }
    }
    if (!cfg.fat_out.empty()) {
        write_file(cfg.fat_out, fat.to_text());
    }

    QramLayout layout;
    try {
        layout = build_layout(n, spares);
    } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
    }

    std::vector<bool> memory = cfg.data.empty() ? std::vector<bool>(n_cells, false)
                                                : parse_bits(cfg.data, n_cells, "data");
    std::vector<bool> spare_bits(static_cast<size_t>(spares), false);
    if (!cfg.spare_data.empty()) {
        spare_bits = parse_bits(cfg.spare_data, static_cast<size_t>(spares), "spare_data");
    } else {
        // The tester copies each faulty cell's data into its spare.
        for (const auto &e : fat.entries()) {
            if (e.spare < spares) {
                spare_bits[static_cast<size_t>(e.spare)] = memory[e.faulty];
            }
        }
    }
    memory.insert(memory.end(), spare_bits.begin(), spare_bits.end());

    const QueryAddress address =
        cfg.query == "uniform" ? QueryAddress::superposition() : QueryAddress::basis(parse_cli_address(cfg.query, n));
    const QueryMode mode = cfg.mode == "write" ? QueryMode::Write : QueryMode::Read;
    const bool dq = cfg.dq == 1;

    FaultAddressTable run_fat = fat;
    if (inject_bug && !fat.empty()) {
        // Harness self-test: forget the last FAT entry inside the circuit only.
        auto entries = fat.entries();
        entries.pop_back();
        run_fat = FaultAddressTable(n, entries);
    }

    QueryOutcome outcome;
    QueryCircuits stages = build_query_circuits(layout, memory, run_fat, address, mode, dq);
    try {
        outcome = run_query(layout, memory, run_fat, address, mode, dq);
    } catch (const InvalidFat &e) {
        throw ConfigError(e.what());
    }

    out << layout.describe();
    out << "FAT (" << fat.size() << " entr" << (fat.size() == 1 ? "y" : "ies") << "):\n";
    out << (fat.empty() ? "  (empty)\n" : fat.to_text());
    out << "memory: data=" << bits_string({memory.begin(), memory.begin() + static_cast<long>(n_cells)})
        << " spares=" << bits_string({memory.begin() + static_cast<long>(n_cells), memory.end()}) << "\n";
    out << "query: address=" << cfg.query << " mode=" << cfg.mode << " dq=" << cfg.dq << "\n";
    out << "gates (" << stages.combined().size() << "):\n" << stages.combined().listing();
    out << "readout distribution: P(Readout=0)=" << fixed(outcome.readout_zero, 3)
        << " P(Readout=1)=" << fixed(outcome.readout_one, 3) << "\n";

    bool match = outcome.norm_error <= 1e-10;
    for (const auto &br : outcome.branches) {
        const auto t = translate_address(fat, br.address);
        const size_t cell = t.location.is_spare() ? n_cells + t.location.index : t.location.index;
        const int leaf_index = static_cast<int>(cell);
        const bool routed = std::abs(br.leaf_activation[static_cast<size_t>(leaf_index)] - 1.0) <= 1e-9;
        const bool flag_ok = std::abs(br.repair_flag - (t.repaired ? 1.0 : 0.0)) <= 1e-9;
        bool ok = routed && flag_ok;
        out << "  |" << format_address(br.address, n) << "> p=" << fixed(br.probability, 3)
            << " -> " << to_string(t.location, n) << " RFQ=" << fixed(br.repair_flag, 3);
        if (mode == QueryMode::Read) {
            const int expected = memory[cell] ? 1 : 0;
            ok = ok && std::abs(br.readout_one - expected) <= 1e-9;
            out << " Readout=" << (br.readout_one > 0.5 ? 1 : 0) << " p="
                << fixed(br.readout_one > 0.5 ? br.readout_one : 1.0 - br.readout_one, 3) << " expected=" << expected;
        }
        out << (ok ? " MATCH" : " MISMATCH") << "\n";
        match = match && ok;
    }
    if (mode == QueryMode::Read && !address.uniform && !outcome.branches.empty()) {
        const auto &br = outcome.branches.front();
        const bool one = br.readout_one > 0.5;
        out << "Readout=" << (one ? 1 : 0) << " p=" << fixed(one ? br.readout_one : 1.0 - br.readout_one, 3) << ", "
            << (match ? "MATCH" : "MISMATCH") << "\n";
    }
    if (mode == QueryMode::Write && !address.uniform) {
        std::vector<bool> expected = memory;
        const auto t = translate_address(fat, address.value);
        const size_t cell = t.location.is_spare() ? n_cells + t.location.index : t.location.index;
        expected[cell] = expected[cell] != dq;
        const bool ok = outcome.post_memory && *outcome.post_memory == expected;
        out << "post-write memory: " << (outcome.post_memory ? bits_string(*outcome.post_memory) : "(entangled)")
            << " expected " << bits_string(expected) << (ok ? " MATCH" : " MISMATCH") << "\n";
        match = match && ok;
    }
    out << "verdict: " << (match ? "MATCH" : "MISMATCH") << "\n";
    return match ? kExitOk : kExitVerification;
}

std::vector<OracleCheck> oracle_agreement_suite(int count, int chips_per_rep, int reps, uint64_t seed,
                                                bool spares_fallible, ExecutionOptions exec) {
    static const int distances[] = {3, 5, 7, 9};
    static const int sizes[] = {16, 32, 64, 128, 256, 512, 1024};
    static const int spares[] = {0, 1, 2, 4, 8};
    Xoshiro256 pick(derive_seed(seed, {0x6f7261636c65ULL}));
    auto draw = [&pick](uint64_t k) { return static_cast<size_t>(pick() % k); };

    std::vector<OracleCheck> out;
    for (int i = 0; i < count; i++) {
        SweepPoint pt{distances[draw(4)], sizes[draw(7)], spares[draw(5)], (5.0 + static_cast<double>(draw(6))) / 1000.0};
        ChipSpec spec{pt.num_logical, pt.num_spares, QecParams(pt.distance), FabricationModel(pt.error_rate),
                      spares_fallible};
        const auto report = simulate_yield(spec, chips_per_rep, reps, seed, static_cast<uint64_t>(i) + 1, exec);
        const double y = analytic_yield(spec);
        const double total = static_cast<double>(chips_per_rep) * reps;
        const double tol = 4.0 * std::sqrt(y * (1.0 - y) / total);
        const double mc = report.yield_mean_pct / 100.0;
        out.push_back({pt, mc, y, tol, std::abs(mc - y) <= tol});
    }
    return out;
}

int cmd_verify(const RunConfig &cfg, std::ostream &out, std::ostream &err, bool inject_bug) {
    validate(cfg);
    nlohmann::ordered_json summary;
    summary["circuit"] = nlohmann::json::array();
    summary["monte_carlo"] = nlohmann::json::array();
    summary["warnings"] = nlohmann::json::array();
    bool all_ok = true;

    CircuitMutator mutator;
    if (inject_bug) {
        // Drop the RFQ -> |1> copy so faulty branches also route to an original.
        mutator = [](QueryCircuits &c) {
            if (!c.repair.mutable_gates().empty()) {
                c.repair.mutable_gates().pop_back();
            }
        };
    }

    for (int n = 1; n <= cfg.max_address_bits; n++) {
        for (int x = 0; x <= std::min(cfg.max_spares, 1 << n); x++) {
            const auto report = verify_against_classical(n, x, mutator);
            nlohmann::ordered_json row{{"address_bits", n},     {"spares", x},
                                       {"cases", report.cases}, {"passed", report.passed},
                                       {"failed", report.failed}, {"status", report.ok() ? "pass" : "fail"}};
            if (report.first_counterexample) {
                row["counterexample"] = *report.first_counterexample;
            }
            summary["circuit"].push_back(row);
            all_ok = all_ok && report.ok();
        }
    }

    for (const auto &c : oracle_agreement_suite(cfg.mc_points, cfg.mc_chips_per_rep, cfg.mc_reps, cfg.master_seed,
                                                cfg.spares_fallible)) {
        summary["monte_carlo"].push_back({{"qec_distance", c.point.distance},
                                          {"num_logical", c.point.num_logical},
                                          {"num_spares", c.point.num_spares},
                                          {"error_rate", c.point.error_rate},
                                          {"mc_yield", c.mc_yield},
                                          {"analytic_yield", c.analytic},
                                          {"tolerance", c.tolerance},
                                          {"status", c.pass ? "pass" : "fail"}});
        all_ok = all_ok && c.pass;
    }

    if (summary["circuit"].empty() && summary["monte_carlo"].empty()) {
        summary["warnings"].push_back("empty verification scope; nothing was checked");
        err << "warning: empty verification scope; passing vacuously\n";
    }
    summary["status"] = all_ok ? "pass" : "fail";
    out << summary.dump(2) << "\n";
    return all_ok ? kExitOk : kExitVerification;
}

namespace {

// Flags are captured as raw strings and applied after the config file so that
// command-line values override file values.
class FlagBinder {
   public:
    void bind(CLI::App *app, const std::string &name, const std::string &help,
              std::function<void(RunConfig &, const std::string &)> apply) {
        auto &slot = storage_.emplace_back();
        auto *opt = app->add_option(name, slot, help);
        bindings_.push_back({opt, &slot, std::move(apply)});
    }

    void flag(CLI::App *app, const std::string &name, const std::string &help,
              std::function<void(RunConfig &)> apply) {
        auto *opt = app->add_flag(name, help);
        bindings_.push_back({opt, nullptr, [apply](RunConfig &c, const std::string &) { apply(c); }});
    }

    void apply(RunConfig &cfg) const {
        for (const auto &b : bindings_) {
            if (b.option->count() > 0) {
                b.apply(cfg, b.value ? *b.value : std::string{});
            }
        }
    }

   private:
    struct Binding {
        CLI::Option *option;
        const std::string *value;
        std::function<void(RunConfig &, const std::string &)> apply;
    };
    std::deque<std::string> storage_;
    std::vector<Binding> bindings_;
};

int to_int(const std::string &s) {
    const auto v = parse_int_list(s);
    if (v.size() != 1) {
        throw ConfigError("expected one integer, got '" + s + "'");
    }
    return v.front();
}

void add_sweep_flags(FlagBinder &fb, CLI::App *app) {
    fb.bind(app, "--preset", "Named grid: fig3b, fig6, fig7a..fig7e, table1",
            [](RunConfig &c, const std::string &v) { c.preset = v; });
    fb.bind(app, "--distances", "Comma-separated code distances",
            [](RunConfig &c, const std::string &v) { c.distances = parse_int_list(v); });
    fb.bind(app, "--logical", "Comma-separated numbers of original logical qubits",
            [](RunConfig &c, const std::string &v) { c.logical_counts = parse_int_list(v); });
    fb.bind(app, "--spares", "Comma-separated numbers of spare logical qubits",
            [](RunConfig &c, const std::string &v) { c.spare_counts = parse_int_list(v); });
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Yield, resource and circuit workbench for redundancy-repaired bucket-brigade qRAM", "qrr"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Print help for every subcommand and exit");

    FlagBinder fb;
    std::string config_path;
    bool dump = false;
    bool inject_bug = false;

    auto common = [&](CLI::App *sub) {
        sub->add_option("--config", config_path, "Config file (key = value lines under [section] headers)");
        sub->add_flag("--dump-config", dump, "Print the resolved configuration and exit");
        fb.bind(sub, "-o,--output", "CSV/output path ('-' for stdout)",
                [](RunConfig &c, const std::string &v) { c.csv_path = v; });
    };

    auto *yield = app.add_subcommand("yield", "Monte-Carlo yield sweep with analytic cross-check (CSV, optional SVG)");
    common(yield);
    add_sweep_flags(fb, yield);
    fb.bind(yield, "--rates", "Comma-separated fabrication error rates",
            [](RunConfig &c, const std::string &v) { c.error_rates = parse_double_list(v); });
    fb.bind(yield, "--chips", "Chips per repetition",
            [](RunConfig &c, const std::string &v) { c.chips_per_rep = to_int(v); });
    fb.bind(yield, "--reps", "Repetitions", [](RunConfig &c, const std::string &v) { c.reps = to_int(v); });
    fb.bind(yield, "--seed", "Master seed", [](RunConfig &c, const std::string &v) {
        try {
            c.master_seed = std::stoull(v);
        } catch (const std::exception &) {
            throw ConfigError("invalid seed '" + v + "'");
        }
    });
    fb.flag(yield, "--infallible-spares", "Spares are never defective",
            [](RunConfig &c) { c.spares_fallible = false; });
    fb.bind(yield, "--svg", "Also write an SVG chart to this path",
            [](RunConfig &c, const std::string &v) { c.svg_path = v; });
    fb.bind(yield, "--chart", "auto, line or heatmap", [](RunConfig &c, const std::string &v) {
        RunConfig tmp;
        apply_config_text(tmp, "[output]\nchart = " + v + "\n");
        c.chart = tmp.chart;
    });

    auto *resource = app.add_subcommand("resource", "Physical-qubit counts and overheads (CSV)");
    common(resource);
    add_sweep_flags(fb, resource);
    fb.flag(resource, "--literal-mem", "Append the literal d*(N+X) memory count column",
            [](RunConfig &c) { c.literal_mem = true; });

    auto *demo = app.add_subcommand("circuit-demo", "Build and simulate the repaired qRAM circuit for one query");
    common(demo);
    fb.bind(demo, "--address-bits", "Address width n (1..3)",
            [](RunConfig &c, const std::string &v) { c.address_bits = to_int(v); });
    fb.bind(demo, "--spares", "Number of spare cells X (default: spare-data length or fault count)",
            [](RunConfig &c, const std::string &v) { c.spares = to_int(v); });
    fb.bind(demo, "--faults", "Comma-separated faulty addresses in binary, e.g. 10,11",
            [](RunConfig &c, const std::string &v) { c.faults = parse_string_list(v); });
    fb.bind(demo, "--defective-spares", "Comma-separated defective spare indices",
            [](RunConfig &c, const std::string &v) { c.defective_spares = parse_int_list(v); });
    fb.bind(demo, "--data", "Original cell contents, cell 0 first, e.g. 1011",
            [](RunConfig &c, const std::string &v) { c.data = v; });
    fb.bind(demo, "--spare-data", "Spare cell contents (default: copied from the faulty cells)",
            [](RunConfig &c, const std::string &v) { c.spare_data = v; });
    fb.bind(demo, "--query", "Binary address or 'uniform'", [](RunConfig &c, const std::string &v) { c.query = v; });
    fb.bind(demo, "--mode", "read or write", [](RunConfig &c, const std::string &v) { c.mode = v; });
    fb.bind(demo, "--dq", "Data bit for writes (0 or 1)", [](RunConfig &c, const std::string &v) { c.dq = to_int(v); });
    fb.bind(demo, "--fat-in", "Load the FAT from a file", [](RunConfig &c, const std::string &v) { c.fat_in = v; });
    fb.bind(demo, "--fat-out", "Write the FAT to a file", [](RunConfig &c, const std::string &v) { c.fat_out = v; });

    auto *verify = app.add_subcommand("verify", "Exhaustive circuit check and Monte-Carlo oracle agreement (JSON)");
    common(verify);
    fb.bind(verify, "--max-address-bits", "Largest address width checked (0..2)",
            [](RunConfig &c, const std::string &v) { c.max_address_bits = to_int(v); });
    fb.bind(verify, "--max-spares", "Largest spare count checked (0..2)",
            [](RunConfig &c, const std::string &v) { c.max_spares = to_int(v); });
    fb.bind(verify, "--mc-points", "Random grid points for the Monte-Carlo check",
            [](RunConfig &c, const std::string &v) { c.mc_points = to_int(v); });
    fb.bind(verify, "--mc-chips", "Chips per repetition for the Monte-Carlo check",
            [](RunConfig &c, const std::string &v) { c.mc_chips_per_rep = to_int(v); });
    fb.bind(verify, "--mc-reps", "Repetitions for the Monte-Carlo check",
            [](RunConfig &c, const std::string &v) { c.mc_reps = to_int(v); });
    fb.bind(verify, "--seed", "Master seed", [](RunConfig &c, const std::string &v) {
        try {
            c.master_seed = std::stoull(v);
        } catch (const std::exception &) {
            throw ConfigError("invalid seed '" + v + "'");
        }
    });
    for (auto *sub : {demo, verify}) {
        sub->add_flag("--inject-bug", inject_bug, "Harness self-test: run a deliberately broken circuit")
            ->group("");
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        RunConfig cfg;
        cfg.command = app.get_subcommands().front()->get_name();
        if (!config_path.empty()) {
            apply_config_text(cfg, read_file(config_path));
            cfg.command = app.get_subcommands().front()->get_name();
        }
        fb.apply(cfg);
        if (dump) {
            out << dump_config(cfg);
            return kExitOk;
        }
        if (cfg.command == "yield") {
            return cmd_yield(cfg, out, err);
        }
        if (cfg.command == "resource") {
            return cmd_resource(cfg, out, err);
        }
        if (cfg.command == "circuit-demo") {
            return cmd_circuit_demo(cfg, out, err, inject_bug);
        }
        return cmd_verify(cfg, out, err, inject_bug);
    } catch (const ConfigError &e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const IoError &e) {
        err << "I/O error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument &e) {
        err << "config error: " << e.what() << "\n";
        return kExitConfig;
    }
}

}  // namespace qrr::cli

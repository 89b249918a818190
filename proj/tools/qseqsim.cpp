// Copyright 2026 The qseqsim Authors
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

// qseqsim command-line driver.
//
// Exit codes: 0 success, 1 parse/analysis diagnostics (JSON on stderr),
// 2 runtime error, 3 invalid command line.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qseq/bench_circuits.hpp"
#include "qseq/executor.hpp"
#include "qseq/qasm/analyzer.hpp"
#include "qseq/report.hpp"

namespace {

using nlohmann::json;
using namespace qseq;

constexpr int kExitDiagnostics = 1;
constexpr int kExitRuntime = 2;
constexpr int kExitUsage = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw RuntimeError("cannot read '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

/// "0,1,1", "011" or with repeats "0*9,1".
std::vector<std::uint8_t> parse_preset(const std::string& text) {
    std::vector<std::uint8_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        if (item.empty()) continue;
        std::size_t star = item.find('*');
        std::string bits = item.substr(0, star);
        std::size_t repeat = 1;
        if (star != std::string::npos) {
            try {
                repeat = std::stoul(item.substr(star + 1));
            } catch (const std::exception&) {
                throw UsageError("bad repeat count in preset item '" + item + "'");
            }
        }
        if (bits.empty() || bits.find_first_not_of("01") != std::string::npos) {
            throw UsageError("preset items must be binary digits, got '" + item + "'");
        }
        for (std::size_t r = 0; r < repeat; ++r) {
            for (char c : bits) out.push_back(static_cast<std::uint8_t>(c - '0'));
        }
    }
    return out;
}

/// "q3=1,pos[0]=0": register element, scalar qubit, or q<N> for flat index N.
std::vector<std::pair<Qubit, bool>> parse_target(const std::string& text, const qasm::ProgramIR& ir) {
    std::vector<std::pair<Qubit, bool>> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const std::size_t eq = item.find('=');
        if (eq == std::string::npos || (item.substr(eq + 1) != "0" && item.substr(eq + 1) != "1")) {
            throw UsageError("target items look like name=0 or name=1, got '" + item + "'");
        }
        const std::string name = item.substr(0, eq);
        std::optional<Qubit> found;
        for (Qubit q = 0; q < ir.num_qubits && !found; ++q) {
            if (ir.qubit_name(q) == name) found = q;
        }
        if (!found && name.size() > 1 && name[0] == 'q' &&
            name.find_first_not_of("0123456789", 1) == std::string::npos) {
            const auto idx = static_cast<Qubit>(std::stoul(name.substr(1)));
            if (idx < ir.num_qubits) found = idx;
        }
        if (!found) throw UsageError("unknown target qubit '" + name + "'");
        out.emplace_back(*found, item.substr(eq + 1) == "1");
    }
    return out;
}

qasm::ProgramIR load(const std::string& path) {
    qasm::ProgramIR ir = qasm::compile(read_file(path));
    if (!ir.ok()) {
        std::cerr << report::diagnostics_json(ir.diagnostics).dump(2) << "\n";
        throw qasm::DiagnosticError(ir.diagnostics.front());
    }
    return ir;
}

double now() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch()).count();
}

// ---------------------------------------------------------------------------
// bench suites

json bench_qrw_reach(unsigned ell, unsigned kmax) {
    qasm::ProgramIR ir = qasm::compile(bench::gen_qrw(ell));
    json rows = json::array();
    for (unsigned k = 1; k <= kmax; ++k) {
        double t0 = now();
        ReachResult r = reach_query(ir, bench::termination_pattern(k));
        rows.push_back({{"k", k}, {"probability", report::scalar_json(r.probability)}, {"time", now() - t0}});
    }
    return {{"suite", "qrw-reach"}, {"ell", ell}, {"rows", rows}};
}

json bench_rus(unsigned kmax, int success) {
    qasm::ProgramIR ir = qasm::compile(bench::gen_rus_x(success));
    json rows = json::array();
    for (unsigned k = 1; k <= kmax; ++k) {
        double t0 = now();
        ReachResult r = reach_query(ir, bench::termination_pattern(k, success));
        rows.push_back({{"k", k}, {"p_global", report::scalar_json(r.probability)}, {"time", now() - t0}});
    }
    return {{"suite", "rus"}, {"rows", rows}};
}

json bench_qrw_scale(const std::vector<std::pair<unsigned, unsigned>>& points) {
    json rows = json::array();
    for (auto [ell, iters] : points) {
        qasm::ProgramIR ir = qasm::compile(bench::gen_qrw(ell));
        RunConfig cfg;
        cfg.preset.assign(iters, 0);
        cfg.max_iterations = iters;
        double t0 = now();
        RunResult r = run(ir, cfg);
        rows.push_back({{"ell", ell},
                        {"qubits", ell + 2},
                        {"iterations", r.total_iterations},
                        {"p_global", report::scalar_json(r.p_global)},
                        {"peak_nodes", r.stats.peak_nodes},
                        {"time", now() - t0}});
    }
    return {{"suite", "qrw-scale"}, {"rows", rows}};
}

json bench_random_while(unsigned q, unsigned g, unsigned m, unsigned seeds) {
    json rows = json::array();
    std::vector<double> times;
    for (unsigned s = 1; s <= seeds; ++s) {
        qasm::ProgramIR ir = qasm::compile(bench::gen_random_while(q, g, m, s));
        RunConfig cfg;
        cfg.mode = Mode::Sample;
        cfg.seed = s;
        double t0 = now();
        RunResult r = run(ir, cfg);
        times.push_back(now() - t0);
        rows.push_back({{"seed", s},
                        {"iterations", r.total_iterations},
                        {"status", std::string(status_name(r.status))},
                        {"time", times.back()}});
    }
    std::sort(times.begin(), times.end());
    const double median =
        times.empty() ? 0 : (times.size() % 2 ? times[times.size() / 2]
                                              : (times[times.size() / 2 - 1] + times[times.size() / 2]) / 2);
    return {{"suite", "random-while"}, {"q", q}, {"g", g}, {"m", m}, {"median_time", median}, {"rows", rows}};
}

json bench_grover(unsigned nd, unsigned kmax) {
    qasm::ProgramIR ir = qasm::compile(bench::gen_grover(nd, (std::uint64_t{1} << nd) - 1));
    json rows = json::array();
    for (unsigned k = 1; k <= kmax; ++k) {
        double t0 = now();
        ReachResult r = reach_query(ir, bench::termination_pattern(k));
        rows.push_back({{"k", k}, {"probability", report::scalar_json(r.probability)}, {"time", now() - t0}});
    }
    return {{"suite", "grover"}, {"nd", nd}, {"rows", rows}};
}

void print_csv(const json& table) {
    const json& rows = table.at("rows");
    if (rows.empty()) return;
    std::vector<std::string> keys;
    for (auto it = rows[0].begin(); it != rows[0].end(); ++it) keys.push_back(it.key());
    for (std::size_t i = 0; i < keys.size(); ++i) std::cout << (i ? "," : "") << keys[i];
    std::cout << "\n";
    for (const json& row : rows) {
        for (std::size_t i = 0; i < keys.size(); ++i) {
            const json& v = row.at(keys[i]);
            std::cout << (i ? "," : "");
            if (v.is_object() && v.contains("float")) {
                std::cout << v["float"].get<double>();
            } else if (v.is_string()) {
                std::cout << v.get<std::string>();
            } else {
                std::cout << v.dump();
            }
        }
        std::cout << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qseqsim: exact symbolic simulation of sequential quantum programs"};
    app.require_subcommand(1);

    // run
    auto* run_cmd = app.add_subcommand("run", "Simulate a program");
    std::string run_file;
    std::string mode = "preset";
    std::string preset_text;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::uint64_t max_iterations = 1000;
    unsigned r_init = 2;
    std::string format = "json";
    bool dump_state = false;
    unsigned dump_limit = kDefaultExtractLimit;
    bool show_ir = false;
    bool timing = false;
    run_cmd->add_option("file", run_file, "OpenQASM 3 source")->required();
    run_cmd->add_option("--mode", mode, "Measurement mode")->check(CLI::IsMember({"sample", "preset"}));
    run_cmd->add_option("--preset", preset_text, "Outcomes in dynamic order, e.g. 0,1,1 or 0*9,1");
    run_cmd->add_option_function<std::uint64_t>(
        "--seed", [&](std::uint64_t v) { seed = v, seed_given = true; }, "RNG seed for sample mode");
    run_cmd->add_option("--max-iterations", max_iterations, "Bound on total while-loop iterations");
    run_cmd->add_option("--r-init", r_init, "Initial number of bit slices (>= 2)")->check(CLI::Range(2u, 64u));
    run_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));
    run_cmd->add_flag("--dump-state", dump_state, "Include final amplitudes (small registers only)");
    run_cmd->add_option("--dump-limit", dump_limit, "Largest register --dump-state will print");
    run_cmd->add_flag("--show-ir", show_ir, "Print the block structure and exit");
    run_cmd->add_flag("--timing", timing, "Include wall-clock time in stats");

    // reach
    auto* reach_cmd = app.add_subcommand("reach", "Probability of a measurement-outcome pattern");
    std::string reach_file;
    std::string reach_preset;
    std::string target_text;
    std::uint64_t reach_max = 1000;
    bool reach_timing = false;
    reach_cmd->add_option("file", reach_file, "OpenQASM 3 source")->required();
    reach_cmd->add_option("--preset", reach_preset, "Outcome pattern")->required();
    reach_cmd->add_option("--target", target_text, "Basis constraint, e.g. q3=1,pos[0]=0");
    reach_cmd->add_option("--max-iterations", reach_max, "Bound on total while-loop iterations");
    reach_cmd->add_flag("--timing", reach_timing, "Include wall-clock time in stats");

    // gen
    auto* gen_cmd = app.add_subcommand("gen", "Generate a benchmark program");
    std::string family;
    std::string out_path;
    std::string manifest_path;
    std::int64_t ell = 8, nd = 4, marked = -1, q = 100, g = 50, m = 5, gen_seed = 1, success = 1;
    gen_cmd->add_option("family", family, "rus_x | qrw | grover | random_while")
        ->required()
        ->check(CLI::IsMember({"rus_x", "qrw", "grover", "random_while"}));
    gen_cmd->add_option("-o,--output", out_path, "Write the program here instead of stdout");
    gen_cmd->add_option("--manifest", manifest_path, "Append a JSON manifest entry to this file");
    gen_cmd->add_option("--ell", ell, "qrw: position qubits");
    gen_cmd->add_option("--nd", nd, "grover: data qubits");
    gen_cmd->add_option("--marked", marked, "grover: marked index (default all ones)");
    gen_cmd->add_option("--qubits", q, "random_while: qubits");
    gen_cmd->add_option("--gates", g, "random_while: gates");
    gen_cmd->add_option("--mids", m, "random_while: mid-circuit measurements");
    gen_cmd->add_option("--seed", gen_seed, "random_while: seed");
    gen_cmd->add_option("--success", success, "rus_x: outcome that ends the loop (0 or 1)");

    // bench
    auto* bench_cmd = app.add_subcommand("bench", "Run a benchmark suite");
    std::string suite;
    std::string bench_format = "json";
    unsigned b_ell = 8, b_k = 10, b_nd = 4, b_q = 100, b_g = 50, b_m = 5, b_seeds = 10;
    bench_cmd->add_option("suite", suite, "qrw-reach | rus | qrw-scale | random-while | grover")
        ->required()
        ->check(CLI::IsMember({"qrw-reach", "rus", "qrw-scale", "random-while", "grover"}));
    bench_cmd->add_option("--format", bench_format)->check(CLI::IsMember({"json", "csv"}));
    bench_cmd->add_option("--ell", b_ell, "qrw-reach: position qubits");
    bench_cmd->add_option("--k", b_k, "qrw-reach/rus/grover: largest termination iteration");
    bench_cmd->add_option("--nd", b_nd, "grover: data qubits");
    bench_cmd->add_option("--qubits", b_q, "random-while: qubits");
    bench_cmd->add_option("--gates", b_g, "random-while: gates");
    bench_cmd->add_option("--mids", b_m, "random-while: mid-circuit measurements");
    bench_cmd->add_option("--seeds", b_seeds, "random-while: number of seeds");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*run_cmd) {
            if (mode == "preset" && run_cmd->count("--preset") == 0 && !show_ir) {
                throw UsageError("--mode preset needs --preset (use --mode sample for sampling)");
            }
            if (mode == "sample" && !seed_given) {
                seed = std::random_device{}();
            }
            RunConfig cfg;
            cfg.mode = mode == "sample" ? Mode::Sample : Mode::Preset;
            cfg.preset = parse_preset(preset_text);
            cfg.seed = seed;
            cfg.max_iterations = max_iterations;
            cfg.r_init = r_init;
            qasm::ProgramIR ir = load(run_file);
            if (dump_state && ir.num_qubits > dump_limit) {
                throw RuntimeError("--dump-state refuses " + std::to_string(ir.num_qubits) +
                                   " qubits (limit " + std::to_string(dump_limit) + ")");
            }
            if (show_ir) {
                std::cout << qasm::describe(ir);
                return 0;
            }
            RunResult r = run(ir, cfg);
            if (format == "text") {
                std::cout << report::run_text(ir, r);
            } else {
                std::cout << report::run_json(ir, r, {dump_state, dump_limit, timing}).dump(2) << "\n";
            }
        } else if (*reach_cmd) {
            std::vector<std::uint8_t> pattern = parse_preset(reach_preset);
            qasm::ProgramIR ir = load(reach_file);
            auto target = target_text.empty() ? std::vector<std::pair<Qubit, bool>>{} : parse_target(target_text, ir);
            ReachResult r = reach_query(ir, pattern, target, reach_max);
            std::cout << report::reach_json(ir, r, {false, kDefaultExtractLimit, reach_timing}).dump(2) << "\n";
        } else if (*gen_cmd) {
            std::vector<std::pair<std::string, std::int64_t>> params = {
                {"ell", ell}, {"nd", nd}, {"q", q}, {"g", g}, {"m", m}, {"seed", gen_seed}, {"success", success}};
            if (marked >= 0) params.emplace_back("marked", marked);
            if (family == "grover" && marked < 0) params.emplace_back("marked", (std::int64_t{1} << nd) - 1);
            bench::BenchProgram b;
            try {
                b = bench::generate(family, params);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            if (out_path.empty()) {
                std::cout << b.text;
            } else {
                std::ofstream(out_path, std::ios::binary) << b.text;
            }
            if (!manifest_path.empty()) {
                json manifest = json::array();
                if (std::ifstream in(manifest_path); in) {
                    manifest = json::parse(in, nullptr, false);
                    if (!manifest.is_array()) manifest = json::array();
                }
                manifest.push_back(report::manifest_entry(b, out_path.empty() ? "-" : out_path));
                std::ofstream(manifest_path) << manifest.dump(2) << "\n";
            }
        } else if (*bench_cmd) {
            json table;
            if (suite == "qrw-reach") table = bench_qrw_reach(b_ell, b_k);
            if (suite == "rus") table = bench_rus(b_k, 1);
            if (suite == "qrw-scale") table = bench_qrw_scale({{62, 10}, {126, 3}, {254, 3}});
            if (suite == "random-while") table = bench_random_while(b_q, b_g, b_m, b_seeds);
            if (suite == "grover") table = bench_grover(b_nd, b_k);
            if (bench_format == "csv") {
                print_csv(table);
            } else {
                std::cout << table.dump(2) << "\n";
            }
        }
    } catch (const qasm::DiagnosticError&) {
        return kExitDiagnostics;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
    return 0;
}

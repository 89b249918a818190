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

#include "qseq/executor.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "gtest/gtest.h"

#include "oracle_runner.hpp"
#include "qseq/bench_circuits.hpp"
#include "qseq/qasm/analyzer.hpp"

using namespace qseq;
using namespace qseq::qasm;
using qseq::testing_util::oracle_preset;
using qseq::testing_util::oracle_sample;
namespace fs = std::filesystem;

namespace {

const std::string kRus = "OPENQASM 3.0;\nqubit[2] q;\nbit c = 0;\n"
                         "while (c == 0) { h q[0]; cx q[0], q[1]; c = measure q[0]; }\n";

ProgramIR must_compile(const std::string& src) {
    ProgramIR ir = compile(src);
    if (!ir.ok()) throw std::runtime_error("test program rejected: " + ir.diagnostics.front().message);
    return ir;
}

RunResult run_preset(const ProgramIR& ir, std::vector<std::uint8_t> preset, std::uint64_t max_iter = 1000) {
    RunConfig cfg;
    cfg.preset = std::move(preset);
    cfg.max_iterations = max_iter;
    return run(ir, cfg);
}

RunResult run_sample(const ProgramIR& ir, std::uint64_t seed) {
    RunConfig cfg;
    cfg.mode = Mode::Sample;
    cfg.seed = seed;
    return run(ir, cfg);
}

RootTwoRational half_pow(int k) { return RootTwoRational(pow2(-k)); }

std::string slurp(const fs::path& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

std::vector<fs::path> positives() {
    std::vector<fs::path> out;
    for (const auto& e : fs::directory_iterator(fs::path(QSEQ_TEST_DATA_DIR) / "golden" / "positive")) {
        out.push_back(e.path());
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_exhausted(const RuntimeError& e) { return std::string(e.what()).find("exhausted") != std::string::npos; }

/// Every preset pattern that runs to completion, MaxIter or Unreachable.
void enumerate_paths(const ProgramIR& ir, std::vector<std::uint8_t>& prefix, std::uint64_t max_iter,
                     const std::function<void(const std::vector<std::uint8_t>&, const RunResult&)>& visit) {
    try {
        RunResult r = run_preset(ir, prefix, max_iter);
        visit(prefix, r);
        return;
    } catch (const RuntimeError& e) {
        if (!is_exhausted(e)) throw;
    }
    for (std::uint8_t b : {0, 1}) {
        prefix.push_back(b);
        enumerate_paths(ir, prefix, max_iter, visit);
        prefix.pop_back();
    }
}

}  // namespace

TEST(ClassicalStore, guard_examples) {
    ProgramIR ir = must_compile("bit[2] c; bit d = 1;");
    ClassicalStore store(ir);
    EXPECT_EQ(store.size(), 3u);
    EXPECT_EQ(store.get(2), std::optional<std::uint8_t>(1));
    EXPECT_FALSE(store.get(0));
    Guard g{{0, 1}, true, 2, "c == 2"};
    EXPECT_THROW(guard_eval(store, g), RuntimeError);
    store.set(0, 0);
    store.set(1, 1);
    EXPECT_TRUE(guard_eval(store, g));
    g.equal = false;
    EXPECT_FALSE(guard_eval(store, g));
    EXPECT_TRUE(guard_eval(store, Guard{{2}, true, 1, "d == 1"}));
    EXPECT_TRUE(guard_eval(store, Guard{{2}, false, 0, "d != 0"}));
    store.set(2, 0);
    EXPECT_FALSE(guard_eval(store, Guard{{2}, true, 1, "d == 1"}));
    ASSERT_EQ(store.history().size(), 3u);
    EXPECT_EQ(store.history().back(), (std::pair<BitIndex, std::uint8_t>{2, 0}));
}

TEST(Executor, rus_first_iteration_success) {
    ProgramIR ir = must_compile(kRus + "bit d;\nd = measure q[1];\n");
    RunResult r = run_preset(ir, {1});
    EXPECT_EQ(r.status, RunStatus::Ok);
    EXPECT_EQ(r.p_global, half_pow(1));
    EXPECT_EQ(r.total_iterations, 1u);
    EXPECT_EQ(r.loop_iterations, std::vector<std::uint64_t>{1});
    ASSERT_EQ(r.deferred.size(), 1u);
    EXPECT_EQ(r.deferred[0].qubit, 1u);
    EXPECT_EQ(r.deferred[0].p1, RootTwoRational(1));
    EXPECT_EQ(r.deferred[0].p0, RootTwoRational(0));
    ASSERT_EQ(r.events.size(), 1u);
    EXPECT_EQ(r.events[0].conditional, half_pow(1));
    EXPECT_EQ(r.store.get(0), std::optional<std::uint8_t>(1));
}

TEST(Executor, rus_second_iteration) {
    ProgramIR ir = must_compile(kRus);
    RunResult r = run_preset(ir, {0, 1});
    EXPECT_EQ(r.status, RunStatus::Ok);
    EXPECT_EQ(r.p_global, half_pow(2));
    EXPECT_EQ(r.total_iterations, 2u);
    EXPECT_EQ(norm_sq(r.state), r.p_global);
}

TEST(Executor, rus_termination_law) {
    ProgramIR ir = must_compile(kRus);
    for (unsigned k = 1; k <= 40; ++k) {
        ReachResult q = reach_query(ir, bench::termination_pattern(k));
        EXPECT_TRUE(q.reachable);
        EXPECT_EQ(q.probability, half_pow(static_cast<int>(k))) << k;
        EXPECT_EQ(q.run.total_iterations, k);
    }
}

TEST(Executor, sampling_is_deterministic_per_seed) {
    ProgramIR ir = must_compile(bench::gen_random_while(5, 30, 2, 3));
    for (std::uint64_t seed : {0u, 1u, 99u}) {
        RunResult a = run_sample(ir, seed);
        RunResult b = run_sample(ir, seed);
        EXPECT_EQ(a.p_global, b.p_global);
        EXPECT_EQ(a.store.history(), b.store.history());
        EXPECT_EQ(extract_amplitudes(a.state), extract_amplitudes(b.state));
    }
}

TEST(Executor, preset_exhausted_is_error) {
    ProgramIR ir = must_compile(kRus);
    try {
        run_preset(ir, {0, 0});
        FAIL() << "expected RuntimeError";
    } catch (const RuntimeError& e) {
        EXPECT_TRUE(is_exhausted(e)) << e.what();
    }
}

TEST(Executor, iteration_bound) {
    ProgramIR ir = must_compile(kRus);
    RunResult r = run_preset(ir, {0, 0, 0, 0, 0}, 3);
    EXPECT_EQ(r.status, RunStatus::MaxIter);
    EXPECT_EQ(r.total_iterations, 3u);
    EXPECT_EQ(r.p_global, half_pow(3));
    EXPECT_EQ(status_name(r.status), "max_iter");
}

TEST(Executor, zero_probability_outcome_is_unreachable) {
    ProgramIR ir = must_compile("qubit[2] q; bit c; c = measure q[0]; x q[0];");
    RunResult r = run_preset(ir, {1});
    EXPECT_EQ(r.status, RunStatus::Unreachable);
    EXPECT_TRUE(r.p_global.is_zero());
    ReachResult q = reach_query(ir, {1});
    EXPECT_FALSE(q.reachable);
    EXPECT_TRUE(reach_query(ir, {0}).reachable);
}

TEST(Executor, guard_reading_unwritten_bit_is_runtime_error) {
    // Rejected statically when it can be proved; the runtime check is the backstop.
    ProgramIR ir = must_compile("qubit q; bit c = 0;");
    ClassicalStore store(ir);
    EXPECT_NO_THROW(guard_eval(store, Guard{{0}, true, 0, ""}));
}

TEST(Executor, p_global_is_state_norm) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        ProgramIR ir = must_compile(bench::gen_random_while(4, 16, 2, seed));
        RunResult r = run_sample(ir, seed);
        if (r.status == RunStatus::Ok) {
            EXPECT_EQ(norm_sq(r.state), r.p_global) << seed;
        }
        RootTwoRational product(1);
        for (const MeasurementEvent& e : r.events) product *= e.conditional;
        EXPECT_EQ(product, r.p_global);
    }
}

TEST(Executor, branch_probabilities_sum_to_one) {
    std::vector<std::string> programs = {kRus, bench::gen_random_while(4, 12, 2, 5), bench::gen_qrw(3)};
    for (const fs::path& p : positives()) programs.push_back(slurp(p));
    for (const std::string& src : programs) {
        ProgramIR ir = must_compile(src);
        RootTwoRational total(0);
        std::size_t paths = 0;
        std::vector<std::uint8_t> prefix;
        enumerate_paths(ir, prefix, 3, [&](const std::vector<std::uint8_t>&, const RunResult& r) {
            total += r.p_global;
            ++paths;
        });
        EXPECT_EQ(total, RootTwoRational(1)) << src;
        EXPECT_GE(paths, 1u);
    }
}

TEST(Executor, branch_selection_matches_inlined_program) {
    const std::string head = "qubit[3] q; bit[2] c; h q[0]; h q[1]; c[0] = measure q[0]; c[1] = measure q[1];";
    ProgramIR branching = must_compile(head +
                                       "switch (c) { case 0 { x q[2]; } case 1, 2 { h q[2]; t q[2]; } "
                                       "default { h q[2]; s q[2]; cx q[2], q[0]; } }");
    const std::map<std::uint64_t, std::string> inlined = {
        {0, "x q[2];"}, {1, "h q[2]; t q[2];"}, {2, "h q[2]; t q[2];"}, {3, "h q[2]; s q[2]; cx q[2], q[0];"}};
    for (const auto& [value, body] : inlined) {
        std::vector<std::uint8_t> preset = {static_cast<std::uint8_t>(value & 1),
                                            static_cast<std::uint8_t>(value >> 1)};
        RunResult a = run_preset(branching, preset);
        // Touching q[0], q[1] afterwards keeps both measurements mid-circuit.
        RunResult b = run_preset(must_compile(head + body + " x q[0]; x q[0]; x q[1]; x q[1];"), preset);
        EXPECT_EQ(a.p_global, b.p_global);
        EXPECT_EQ(extract_amplitudes(a.state), extract_amplitudes(b.state)) << value;
    }
}

TEST(Executor, rus_sampled_iteration_distribution) {
    ProgramIR ir = must_compile(kRus);
    constexpr int kRuns = 10000;
    std::map<std::uint64_t, int> counts;
    for (int seed = 0; seed < kRuns; ++seed) {
        RunResult r = run_sample(ir, static_cast<std::uint64_t>(seed));
        ASSERT_EQ(r.status, RunStatus::Ok);
        ASSERT_EQ(r.p_global, half_pow(static_cast<int>(r.total_iterations)));
        ++counts[r.total_iterations];
    }
    for (std::uint64_t k = 1; k <= 5; ++k) {
        EXPECT_NEAR(counts[k] / double(kRuns), std::ldexp(1.0, -static_cast<int>(k)), 0.02) << k;
    }
}

TEST(Executor, qrw_reach_probabilities) {
    ProgramIR ir = must_compile(bench::gen_qrw(8));
    const std::vector<double> expected = {0.5, 0, 0.125, 0, 0, 0, 0.0078125, 0, 0, 0};
    for (unsigned k = 1; k <= expected.size(); ++k) {
        ReachResult q = reach_query(ir, bench::termination_pattern(k));
        EXPECT_EQ(q.probability.to_double(), expected[k - 1]) << k;
        EXPECT_EQ(q.reachable, expected[k - 1] > 0);
    }
}

TEST(Executor, reach_with_target_sums_over_outcomes) {
    ProgramIR ir = must_compile("qubit[2] q; h q[0]; cx q[0], q[1]; t q[1]; h q[1];");
    const std::pair<Qubit, bool> t0[] = {{0, false}};
    const std::pair<Qubit, bool> t1[] = {{0, true}};
    const std::pair<Qubit, bool> both[] = {{0, true}, {1, true}};
    RootTwoRational a = reach_query(ir, {}, t0).probability;
    RootTwoRational b = reach_query(ir, {}, t1).probability;
    EXPECT_EQ(a + b, RootTwoRational(1));
    EXPECT_EQ(a, half_pow(1));
    EXPECT_EQ(reach_query(ir, {}, both).probability, half_pow(2));
    const std::pair<Qubit, bool> bad[] = {{7, true}};
    EXPECT_THROW(reach_query(ir, {}, bad), RuntimeError);
}

TEST(Executor, initial_width_does_not_change_results) {
    ProgramIR ir = must_compile(bench::gen_random_while(4, 20, 2, 11));
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        RunConfig cfg;
        cfg.mode = Mode::Sample;
        cfg.seed = seed;
        RunResult a = run(ir, cfg);
        cfg.r_init = 6;
        RunResult b = run(ir, cfg);
        EXPECT_EQ(a.p_global, b.p_global);
        EXPECT_EQ(a.store.history(), b.store.history());
        EXPECT_EQ(extract_amplitudes(a.state), extract_amplitudes(b.state));
    }
}

TEST(Executor, matches_dense_oracle_on_random_programs) {
    std::mt19937_64 rng(2024);
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const unsigned q = 3 + seed % 4;
        ProgramIR ir = must_compile(bench::gen_random_while(q, 10 + seed % 20, seed % 3, seed));
        auto orc = oracle_sample(ir, rng, 50);
        if (orc.stopped) continue;
        RunResult r = run_preset(ir, orc.outcomes, 50);
        ASSERT_EQ(r.status, RunStatus::Ok) << seed;
        EXPECT_EQ(r.p_global, orc.p) << seed;
        EXPECT_EQ(r.total_iterations, orc.iterations);
        EXPECT_EQ(extract_amplitudes(r.state), oracle::dense_amplitudes(orc.state)) << seed;
        for (const DeferredMeasurement& d : r.deferred) {
            auto [p0, p1] = oracle::dense_prob(orc.state, d.qubit);
            EXPECT_EQ(d.p1, p1 / orc.p);
            EXPECT_EQ(d.p0, p0 / orc.p);
        }
    }
}

TEST(Executor, matches_dense_oracle_on_golden_programs) {
    for (const fs::path& p : positives()) {
        SCOPED_TRACE(p.filename().string());
        ProgramIR ir = must_compile(slurp(p));
        std::vector<std::uint8_t> prefix;
        enumerate_paths(ir, prefix, 3, [&](const std::vector<std::uint8_t>& preset, const RunResult& r) {
            auto orc = oracle_preset(ir, preset, 3);
            EXPECT_EQ(r.p_global, orc.p);
            if (r.status == RunStatus::Ok) {
                EXPECT_EQ(extract_amplitudes(r.state), oracle::dense_amplitudes(orc.state));
            }
        });
    }
}

// ---------------------------------------------------------------------------
// Sequential-circuit view of a loop.

namespace {

struct SqcFixture {
    ProgramIR ir;
    const Sqc* loop = nullptr;
    Qubit external = 1;

    explicit SqcFixture(const std::string& src) : ir(must_compile(src)) {
        for (const Block& b : ir.blocks.blocks) {
            if (const auto* s = std::get_if<Sqc>(&b.node)) loop = s;
        }
    }

    SymbolicState internal0() const {
        auto manager = std::make_shared<bdd::Manager>(ir.num_qubits);
        return init_basis(manager, std::string(ir.num_qubits - external, '0'), external);
    }
};

}  // namespace

TEST(RunSqc, rus_single_iteration) {
    SqcFixture f(kRus);
    SqcConfig cfg;
    cfg.external = 1;
    cfg.preset = {{1}};
    SqcResult r = run_sqc(f.ir, *f.loop, f.internal0(), cfg);
    EXPECT_EQ(r.status, RunStatus::Ok);
    EXPECT_EQ(r.iterations, 1u);
    EXPECT_EQ(r.p_global, half_pow(1));
    EXPECT_EQ(r.internal.qubit_count(), 1u);
    Amplitudes a = extract_amplitudes(r.internal);
    ASSERT_EQ(a.entries.size(), 1u);
    EXPECT_EQ(a.entries[0].first, 1u);
    EXPECT_EQ(norm_sq(r.internal), half_pow(1));
    EXPECT_EQ(r.store.get(0), std::optional<std::uint8_t>(1));
}

TEST(RunSqc, guard_false_returns_input) {
    SqcFixture f("qubit[2] q; bit c = 1; while (c == 0) { h q[0]; cx q[0], q[1]; c = measure q[0]; }");
    SqcConfig cfg;
    cfg.external = 1;
    SymbolicState in = f.internal0();
    SqcResult r = run_sqc(f.ir, *f.loop, in, cfg);
    EXPECT_EQ(r.iterations, 0u);
    EXPECT_EQ(r.p_global, RootTwoRational(1));
    EXPECT_EQ(r.internal, in);
}

TEST(RunSqc, matches_whole_program_run_on_qrw) {
    SqcFixture f(bench::gen_qrw(4));
    for (unsigned k = 1; k <= 6; ++k) {
        SqcConfig cfg;
        cfg.external = 1;
        for (std::uint8_t b : bench::termination_pattern(k)) cfg.preset.push_back({b});
        SqcResult s = run_sqc(f.ir, *f.loop, f.internal0(), cfg);
        ReachResult q = reach_query(f.ir, bench::termination_pattern(k));
        EXPECT_EQ(s.p_global, q.probability) << k;
        EXPECT_EQ(s.iterations, k);
        if (!q.reachable) continue;
        const std::uint8_t flag[] = {1};
        EXPECT_EQ(extract_amplitudes(s.internal), extract_amplitudes(retain(q.run.state, flag))) << k;
    }
}

TEST(RunSqc, sampled_and_bounded) {
    SqcFixture f(kRus);
    SqcConfig cfg;
    cfg.external = 1;
    cfg.seed = 17;
    SqcResult a = run_sqc(f.ir, *f.loop, f.internal0(), cfg);
    SqcResult b = run_sqc(f.ir, *f.loop, f.internal0(), cfg);
    EXPECT_EQ(a.outcomes, b.outcomes);
    EXPECT_EQ(a.p_global, half_pow(static_cast<int>(a.iterations)));
    cfg.preset = {{0}, {0}, {0}};
    cfg.max_iterations = 2;
    SqcResult c = run_sqc(f.ir, *f.loop, f.internal0(), cfg);
    EXPECT_EQ(c.status, RunStatus::MaxIter);
    EXPECT_EQ(c.iterations, 2u);
    cfg.max_iterations = 10;
    EXPECT_THROW(run_sqc(f.ir, *f.loop, f.internal0(), cfg), RuntimeError);
}

TEST(RunSqc, rejects_misplaced_internal_state) {
    SqcFixture f(kRus);
    SqcConfig cfg;
    cfg.external = 1;
    EXPECT_THROW(run_sqc(f.ir, *f.loop, init_basis(2, "00"), cfg), std::invalid_argument);
}

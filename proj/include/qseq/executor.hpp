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

/// @file executor.hpp
/// @brief Runs an analyzed program over a SymbolicState with exact path probabilities.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qseq/qasm/ir.hpp"
#include "qseq/scalar.hpp"
#include "qseq/symbolic_state.hpp"

namespace qseq {

/// Runtime failures: exhausted preset list, unwritten guard bits, size limits.
class RuntimeError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

enum class Mode { Sample, Preset };

struct RunConfig {
    Mode mode = Mode::Preset;
    /// Outcomes consumed in dynamic measurement order (one global queue).
    std::vector<std::uint8_t> preset;
    std::uint64_t seed = 0;
    /// Total while-loop iterations before the run stops with status MaxIter.
    std::uint64_t max_iterations = 1000;
    unsigned r_init = 2;
};

enum class RunStatus { Ok, MaxIter, Unreachable };

std::string_view status_name(RunStatus s);

class ClassicalStore {
  public:
    ClassicalStore() = default;
    explicit ClassicalStore(const qasm::ProgramIR& ir);

    std::optional<std::uint8_t> get(qasm::BitIndex b) const { return values_.at(b); }
    void set(qasm::BitIndex b, std::uint8_t v);
    std::size_t size() const { return values_.size(); }
    const std::string& name(qasm::BitIndex b) const { return names_.at(b); }
    /// Integer value of `bits` (bits[0] least significant). Throws RuntimeError on an unwritten bit.
    std::uint64_t read(std::span<const qasm::BitIndex> bits) const;
    const std::vector<std::pair<qasm::BitIndex, std::uint8_t>>& history() const { return history_; }

  private:
    std::vector<std::optional<std::uint8_t>> values_;
    std::vector<std::string> names_;
    std::vector<std::pair<qasm::BitIndex, std::uint8_t>> history_;
};

bool guard_eval(const ClassicalStore& store, const qasm::Guard& guard);

struct MeasurementEvent {
    std::uint32_t measurement = 0;  ///< ProgramIR::measurements index
    Qubit qubit = 0;
    std::uint8_t outcome = 0;
    RootTwoRational conditional;  ///< probability of this outcome given the path so far
};

/// Marginal of a deferred final measurement, conditioned on the executed path.
struct DeferredMeasurement {
    std::uint32_t measurement = 0;
    Qubit qubit = 0;
    std::optional<qasm::BitIndex> bit;
    RootTwoRational p0;
    RootTwoRational p1;
};

struct RunStats {
    std::size_t peak_nodes = 0;
    std::size_t slice_nodes = 0;
    std::uint64_t wmc_count_calls = 0;
    double seconds = 0;
};

struct RunResult {
    SymbolicState state;
    RootTwoRational p_global;
    ClassicalStore store;
    std::vector<MeasurementEvent> events;
    std::vector<DeferredMeasurement> deferred;
    /// Iterations of each while loop execution, in the order the loops finished.
    std::vector<std::uint64_t> loop_iterations;
    std::uint64_t total_iterations = 0;
    RunStatus status = RunStatus::Ok;
    RunStats stats;
};

/// Throws RuntimeError (preset exhausted, unwritten guard bit) and std::invalid_argument (ir has diagnostics).
RunResult run(const qasm::ProgramIR& ir, const RunConfig& cfg);

struct ReachResult {
    bool reachable = false;
    /// p_global, or the mass consistent with `target` when one is given.
    RootTwoRational probability;
    RunResult run;
};

ReachResult reach_query(const qasm::ProgramIR& ir, std::vector<std::uint8_t> pattern,
                        std::span<const std::pair<Qubit, bool>> target = {}, std::uint64_t max_iterations = 1000);

/// One while loop run as a sequential circuit: every iteration composes a
/// fresh external register (qubits [0, external) of the frame) with the
/// internal state, runs the body, measures the external register and retains.
struct SqcConfig {
    Qubit external = 0;
    /// External basis input for iteration i (0-based); all zeros when empty.
    std::function<std::string(std::uint64_t)> inputs;
    /// External-only gates applied after composition (non-basis inputs).
    std::vector<GateOp> prep;
    /// Per-iteration external outcomes; sampled when empty.
    std::vector<std::vector<std::uint8_t>> preset;
    std::uint64_t seed = 0;
    /// Outcomes for mid measurements of internal qubits inside the body.
    std::vector<std::uint8_t> body_preset;
    std::uint64_t max_iterations = 1000;
    /// Called with the frame state after the body, before external measurement.
    std::function<void(std::uint64_t, const SymbolicState&)> after_body;
};

struct SqcResult {
    SymbolicState internal;
    RootTwoRational p_global;
    std::uint64_t iterations = 0;
    RunStatus status = RunStatus::Ok;
    std::vector<std::vector<std::uint8_t>> outcomes;
    ClassicalStore store;
};

/// `internal0` must live on [external, N) of an N = ir.num_qubits manager.
/// Body measurements of external qubits are not executed in place; the bit
/// they target receives that qubit's end-of-iteration outcome instead.
SqcResult run_sqc(const qasm::ProgramIR& ir, const qasm::Sqc& loop, const SymbolicState& internal0,
                  const SqcConfig& cfg);

}  // namespace qseq

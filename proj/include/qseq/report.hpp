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

/// @file report.hpp
/// @brief JSON renderings of results, states, diagnostics and benchmark manifests.

#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "qseq/bench_circuits.hpp"
#include "qseq/executor.hpp"
#include "qseq/qasm/diagnostic.hpp"
#include "qseq/qasm/ir.hpp"

namespace qseq::report {

/// {rational, sqrt2_coeff, float}: the value rational + sqrt2_coeff * sqrt(2).
nlohmann::json scalar_json(const RootTwoRational& v);

/// {n, k, r, amplitudes: [{index, a, b, c, d}], norm_sq: {p, q}}.
/// Throws std::length_error when the register is wider than `limit`.
nlohmann::json state_json(const SymbolicState& s, Qubit limit = kDefaultExtractLimit);

struct JsonOptions {
    bool dump_state = false;
    Qubit limit = kDefaultExtractLimit;
    /// Wall-clock time in stats; off by default so seeded runs print identical bytes.
    bool timing = false;
};

nlohmann::json run_json(const qasm::ProgramIR& ir, const RunResult& r, const JsonOptions& opts = {});

/// run_json plus {reachable, probability}.
nlohmann::json reach_json(const qasm::ProgramIR& ir, const ReachResult& r, const JsonOptions& opts = {});

/// {diagnostics: [{code, message, line, col}]}.
nlohmann::json diagnostics_json(const std::vector<qasm::Diagnostic>& diags);

nlohmann::json manifest_entry(const bench::BenchProgram& b, const std::string& file);

/// Human-readable summary used by `--format text`.
std::string run_text(const qasm::ProgramIR& ir, const RunResult& r);

}  // namespace qseq::report

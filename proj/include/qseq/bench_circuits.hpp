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

/// @file bench_circuits.hpp
/// @brief OpenQASM generators for the benchmark families.

#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace qseq::bench {

/// Repeat-until-success X gate: q[0] ancilla (external), q[1] data (internal).
/// The loop ends when the measured ancilla equals `success_bit`; for
/// success_bit = 0 the ancilla is reset after each failing measurement.
std::string gen_rus_x(int success_bit = 1);

/// Quantum random walk: flag (q0), coin, ell position qubits (pos[0] least significant).
/// Each iteration: H on coin; +1 on coin 0, -1 on coin 1; flag set when coin = 1
/// and position = all ones; the flag is measured and the loop continues on 0.
std::string gen_qrw(unsigned ell);

/// Grover search over nd data qubits (d[0] most significant bit of `marked`),
/// with a flag qubit set when the data register holds `marked`.
std::string gen_grover(unsigned nd, std::uint64_t marked);

/// Random Clifford+T gates around one while loop. q[0] is the guard qubit
/// (H then measure each iteration); m mid measurements each drive an if.
std::string gen_random_while(unsigned q, unsigned g, unsigned m, std::uint64_t seed);

/// Preset pattern for termination at iteration k: (1 - success)^(k-1) then success.
std::vector<std::uint8_t> termination_pattern(unsigned k, int success_bit = 1);

struct BenchProgram {
    std::string family;
    std::vector<std::pair<std::string, std::int64_t>> params;
    unsigned qubits = 0;
    std::string text;
};

/// Dispatches to the generators above; throws std::invalid_argument on bad parameters.
BenchProgram generate(const std::string& family, const std::vector<std::pair<std::string, std::int64_t>>& params);

}  // namespace qseq::bench

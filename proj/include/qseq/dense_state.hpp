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

/// @file dense_state.hpp
/// @brief Exact 2^n-entry reference simulator used as a test oracle.
///
/// Deliberately naive: one OmegaInt per basis index and a global exponent k,
/// with the same amplitude convention as SymbolicState (qubit 0 is the most
/// significant index bit). Limited to 14 qubits.

#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "qseq/gate.hpp"
#include "qseq/scalar.hpp"
#include "qseq/symbolic_state.hpp"

namespace qseq::oracle {

inline constexpr Qubit kMaxDenseQubits = 14;

struct DenseState {
    Qubit n = 0;
    unsigned k = 0;
    std::vector<OmegaInt> entries;
};

/// Throws std::length_error above kMaxDenseQubits.
DenseState dense_basis(Qubit n, std::string_view bits);
DenseState dense_apply(const DenseState& s, const GateOp& g);
std::pair<RootTwoRational, RootTwoRational> dense_prob(const DenseState& s, Qubit t);
DenseState dense_measure(const DenseState& s, Qubit t, bool outcome);
RootTwoRational dense_norm_sq(const DenseState& s);
/// |ext> (x) s.
DenseState dense_compose(std::string_view ext_bits, const DenseState& s);
/// Keeps the entries whose leading outcomes.size() bits match, dropping those bits.
DenseState dense_retain(const DenseState& s, std::span<const std::uint8_t> outcomes);
/// Halves all entries while k >= 2 and every component is even.
DenseState dense_normalize(DenseState s);
/// Nonzero entries after dense_normalize, in the layout of extract_amplitudes.
Amplitudes dense_amplitudes(const DenseState& s);

}  // namespace qseq::oracle

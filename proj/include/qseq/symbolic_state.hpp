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

/// @file symbolic_state.hpp
/// @brief Bit-sliced BDD encoding of a quantum state and its update rules.
///
/// A state on qubits q_first..q_{N-1} of an N-variable manager stores an
/// exponent k and, for each component u of (a, b, c, d), r two's-complement
/// bit planes F[u][0..r-1]. The amplitude of basis index x is
///
///     (a_x w^3 + b_x w^2 + c_x w + d_x) / sqrt(2)^k,
///     u_x = -2^(r-1) F[u][r-1](x) + sum_{i<r-1} 2^i F[u][i](x).
///
/// Qubit q_first is the most significant bit of the index. States are not
/// renormalized after measurement: norm_sq() is the probability of the path
/// that produced them.

#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "qseq/bdd.hpp"
#include "qseq/gate.hpp"
#include "qseq/scalar.hpp"

namespace qseq {

enum Component : int { kCompA = 0, kCompB = 1, kCompC = 2, kCompD = 3 };

using Slices = std::vector<bdd::Bdd>;

class SymbolicState {
  public:
    SymbolicState(std::shared_ptr<bdd::Manager> manager, Qubit first_qubit, unsigned k,
                  std::array<Slices, 4> components);

    bdd::Manager& manager() const { return *manager_; }
    const std::shared_ptr<bdd::Manager>& manager_ptr() const { return manager_; }

    /// Variables of the manager; the state lives on the tail [first_qubit, total).
    Qubit total_qubits() const { return manager_->variable_count(); }
    Qubit first_qubit() const { return first_; }
    Qubit qubit_count() const { return total_qubits() - first_; }

    unsigned k() const { return k_; }
    unsigned width() const { return static_cast<unsigned>(components_[0].size()); }
    const Slices& component(int u) const { return components_[u]; }
    const bdd::Bdd& slice(int u, unsigned i) const { return components_[u][i]; }

    /// Shared node count over all slices.
    std::size_t node_count() const;

    /// Structural equality: same register, k, width and slices.
    friend bool operator==(const SymbolicState& a, const SymbolicState& b);

  private:
    std::shared_ptr<bdd::Manager> manager_;
    Qubit first_;
    unsigned k_;
    std::array<Slices, 4> components_;
};

/// Basis state |bits> on q_first.. of `manager`; bits[j] is qubit first+j.
/// Throws std::invalid_argument when the length does not match the register.
SymbolicState init_basis(std::shared_ptr<bdd::Manager> manager, std::string_view bits,
                         Qubit first_qubit = 0, unsigned width = 2);
/// Convenience overload with a fresh manager of n variables.
SymbolicState init_basis(Qubit n, std::string_view bits);

SymbolicState apply_gate(const SymbolicState& s, const GateOp& g);

/// Unnormalized projection onto outcome `outcome` of qubit t.
SymbolicState mid_measure(const SymbolicState& s, Qubit t, bool outcome);
/// Projection onto several outcomes at once (conjoined literals).
SymbolicState collapse(const SymbolicState& s, std::span<const std::pair<Qubit, bool>> outcomes);

/// Joint (unnormalized) probabilities of measuring 0 and 1 on qubit t,
/// computed by weighted model counting. p0 + p1 == norm_sq(s) exactly.
std::pair<RootTwoRational, RootTwoRational> get_prob(const SymbolicState& s, Qubit t);
RootTwoRational norm_sq(const SymbolicState& s);

/// Drops redundant sign slices and divides out common factors of 2 while k >= 2.
SymbolicState reduce(SymbolicState s);

struct Amplitudes {
    Qubit n = 0;
    unsigned k = 0;
    /// Nonzero entries in increasing index order.
    std::vector<std::pair<std::uint64_t, OmegaInt>> entries;

    friend bool operator==(const Amplitudes&, const Amplitudes&) = default;
};

inline constexpr Qubit kDefaultExtractLimit = 20;

/// Throws std::length_error when the register is wider than `limit`.
Amplitudes extract_amplitudes(const SymbolicState& s, Qubit limit = kDefaultExtractLimit);

/// Tensor product |ext> (x) s_in, where the external register is the
/// ext.size() qubits immediately before s_in's register.
SymbolicState compose(std::string_view ext_bits, const SymbolicState& s_in);

/// Conditions on outcomes of the first outcomes.size() qubits of the register
/// and drops them, keeping only the remaining (internal) register.
SymbolicState retain(const SymbolicState& s, std::span<const std::uint8_t> outcomes);

}  // namespace qseq

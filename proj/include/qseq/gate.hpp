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

#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace qseq {

using Qubit = std::uint32_t;

enum class GateKind : std::uint8_t { X, Y, Z, H, S, Sdg, T, Tdg, CX, CZ, Swap, CCX, MCX, MCZ };

std::string_view gate_name(GateKind kind);
/// Lower-case OpenQASM name ("x", "sdg", "cx", ...) to kind; MCX/MCZ have no
/// direct name and are reached through `ctrl @` modifiers.
std::optional<GateKind> gate_from_name(std::string_view name);

/// A Clifford+T gate (plus multi-controlled X/Z). Controls may be empty;
/// SWAP has two targets and every other kind exactly one.
struct GateOp {
    GateKind kind = GateKind::X;
    std::vector<Qubit> controls;
    std::vector<Qubit> targets;

    static GateOp single(GateKind kind, Qubit target);
    static GateOp cx(Qubit control, Qubit target);
    static GateOp cz(Qubit control, Qubit target);
    static GateOp swap(Qubit a, Qubit b);
    static GateOp ccx(Qubit c0, Qubit c1, Qubit target);
    static GateOp mcx(std::vector<Qubit> controls, Qubit target);
    static GateOp mcz(std::vector<Qubit> controls, Qubit target);

    /// All operands, controls first.
    std::vector<Qubit> operands() const;
    /// Throws std::invalid_argument on wrong arity, repeated or out-of-range operands.
    void validate(Qubit qubit_count) const;
    /// The gate that undoes this one.
    GateOp inverse() const;

    friend bool operator==(const GateOp&, const GateOp&) = default;
};

std::ostream& operator<<(std::ostream& out, const GateOp& g);

}  // namespace qseq

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

/// @file ir.hpp
/// @brief Analyzed program: flat qubit/bit numbering and the CQC/DQC/SQC block tree.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qseq/gate.hpp"
#include "qseq/qasm/diagnostic.hpp"

namespace qseq::qasm {

using BitIndex = std::uint32_t;

struct QubitRegister {
    std::string name;
    Qubit offset = 0;
    std::uint32_t size = 1;
    bool scalar = true;
};

struct BitRegister {
    std::string name;
    BitIndex offset = 0;
    std::uint32_t size = 1;
    bool scalar = true;
};

struct MeasureOp {
    std::uint32_t id = 0;  ///< index into ProgramIR::measurements
    Qubit qubit = 0;
    std::optional<BitIndex> bit;
    bool mid = false;
};

/// Only present between lowering and the reset rewrite; analyze() never returns one.
struct ResetOp {
    Qubit qubit = 0;
};

struct Op {
    std::variant<GateOp, MeasureOp, ResetOp> node;
    SourcePos pos;
};

/// Bits read as an unsigned integer; bits[0] is the least significant.
struct Guard {
    std::vector<BitIndex> bits;
    bool equal = true;
    std::uint64_t value = 0;
    std::string text;
};

struct Block;

struct BlockTree {
    std::vector<Block> blocks;
};

/// Straight-line operations.
struct Cqc {
    std::vector<Op> ops;
};

struct Branch {
    std::vector<std::uint64_t> values;
    BlockTree body;
};

/// Branch selected by the integer value of `selector`; `otherwise` when no value matches.
struct Dqc {
    std::vector<BitIndex> selector;
    std::string text;
    std::vector<Branch> branches;
    BlockTree otherwise;
    SourcePos pos;
};

/// `while (guard) body`.
struct Sqc {
    Guard guard;
    BlockTree body;
    SourcePos pos;
};

struct Block {
    std::variant<Cqc, Dqc, Sqc> node;
};

struct MeasurementInfo {
    std::uint32_t id = 0;
    Qubit qubit = 0;
    std::optional<BitIndex> bit;
    bool mid = false;
    bool in_loop = false;
    SourcePos pos;
};

struct ProgramIR {
    Qubit num_qubits = 0;
    std::vector<QubitRegister> qregs;
    std::vector<BitRegister> cregs;
    /// "c" for scalar bits, "c[2]" for register elements.
    std::vector<std::string> bit_names;
    std::vector<std::optional<std::uint8_t>> initial_bits;
    BlockTree blocks;
    std::vector<MeasurementInfo> measurements;
    std::vector<Diagnostic> diagnostics;

    bool ok() const { return diagnostics.empty(); }
    BitIndex bit_count() const { return static_cast<BitIndex>(bit_names.size()); }
    std::string qubit_name(Qubit q) const;
};

/// Pre-order walk over every operation, visiting all branches and loop bodies once.
void for_each_op(const BlockTree& tree, const std::function<void(const Op&)>& fn);

/// Indented human-readable outline of the block structure.
std::string describe(const ProgramIR& ir);

}  // namespace qseq::qasm

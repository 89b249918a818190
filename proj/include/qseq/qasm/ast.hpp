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

/// @file ast.hpp
/// @brief Syntax tree for the supported OpenQASM 3 fragment.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qseq/qasm/diagnostic.hpp"

namespace qseq::qasm {

/// `var + offset`, or a plain integer when var is empty.
struct IndexExpr {
    std::optional<std::string> var;
    std::int64_t offset = 0;
    friend bool operator==(const IndexExpr&, const IndexExpr&) = default;
};

/// `name` or `name[index]`.
struct Operand {
    std::string name;
    std::optional<IndexExpr> index;
    SourcePos pos;
    friend bool operator==(const Operand&, const Operand&) = default;
};

/// `lhs == value` or `lhs != value`.
struct Condition {
    Operand lhs;
    bool equal = true;
    std::uint64_t value = 0;
    friend bool operator==(const Condition&, const Condition&) = default;
};

struct Statement;
using Body = std::vector<Statement>;

struct VersionStmt {
    std::string version;
    friend bool operator==(const VersionStmt&, const VersionStmt&) = default;
};

struct IncludeStmt {
    std::string path;
    friend bool operator==(const IncludeStmt&, const IncludeStmt&) = default;
};

struct QubitDecl {
    std::string name;
    std::optional<std::uint32_t> size;  ///< nullopt for a scalar qubit
    friend bool operator==(const QubitDecl&, const QubitDecl&) = default;
};

struct BitInit {
    bool quoted = false;  ///< "0101" versus an integer literal
    std::string digits;
    friend bool operator==(const BitInit&, const BitInit&) = default;
};

struct BitDecl {
    std::string name;
    std::optional<std::uint32_t> size;
    std::optional<BitInit> init;
    friend bool operator==(const BitDecl&, const BitDecl&) = default;
};

struct GateStmt {
    std::string name;
    std::uint32_t ctrl = 0;  ///< total count of `ctrl @` modifiers
    std::vector<Operand> operands;
    friend bool operator==(const GateStmt&, const GateStmt&) = default;
};

struct MeasureStmt {
    Operand qubit;
    std::optional<Operand> target;
    bool arrow = false;  ///< `measure q -> c;` rather than `c = measure q;`
    friend bool operator==(const MeasureStmt&, const MeasureStmt&) = default;
};

struct ResetStmt {
    Operand qubit;
    friend bool operator==(const ResetStmt&, const ResetStmt&) = default;
};

struct BarrierStmt {
    std::vector<Operand> operands;
    friend bool operator==(const BarrierStmt&, const BarrierStmt&) = default;
};

struct IfStmt {
    Condition cond;
    Body then_body;
    std::optional<Body> else_body;
    friend bool operator==(const IfStmt&, const IfStmt&);
};

struct SwitchCase {
    std::vector<std::uint64_t> values;
    Body body;
    friend bool operator==(const SwitchCase&, const SwitchCase&);
};

struct SwitchStmt {
    Operand selector;
    std::vector<SwitchCase> cases;
    std::optional<Body> default_body;
    friend bool operator==(const SwitchStmt&, const SwitchStmt&);
};

struct ForStmt {
    std::string type;  ///< may be empty
    std::string var;
    IndexExpr lo;
    IndexExpr hi;
    Body body;
    friend bool operator==(const ForStmt&, const ForStmt&);
};

struct WhileStmt {
    Condition cond;
    Body body;
    friend bool operator==(const WhileStmt&, const WhileStmt&);
};

struct Statement {
    std::variant<VersionStmt, IncludeStmt, QubitDecl, BitDecl, GateStmt, MeasureStmt, ResetStmt, BarrierStmt,
                 IfStmt, SwitchStmt, ForStmt, WhileStmt>
        node;
    SourcePos pos;
    friend bool operator==(const Statement&, const Statement&) = default;
};

inline bool operator==(const IfStmt& a, const IfStmt& b) {
    return a.cond == b.cond && a.then_body == b.then_body && a.else_body == b.else_body;
}
inline bool operator==(const SwitchCase& a, const SwitchCase& b) { return a.values == b.values && a.body == b.body; }
inline bool operator==(const SwitchStmt& a, const SwitchStmt& b) {
    return a.selector == b.selector && a.cases == b.cases && a.default_body == b.default_body;
}
inline bool operator==(const ForStmt& a, const ForStmt& b) {
    return a.type == b.type && a.var == b.var && a.lo == b.lo && a.hi == b.hi && a.body == b.body;
}
inline bool operator==(const WhileStmt& a, const WhileStmt& b) { return a.cond == b.cond && a.body == b.body; }

struct Program {
    Body statements;
    friend bool operator==(const Program&, const Program&) = default;
};

}  // namespace qseq::qasm

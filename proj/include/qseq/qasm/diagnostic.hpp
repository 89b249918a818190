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

/// @file diagnostic.hpp
/// @brief Frontend diagnostics with stable codes.
///
///   E100 lexical error            E200 undeclared identifier
///   E101 syntax error             E201 redeclaration / shadowing
///   E102 unsupported construct    E202 index out of range
///   E103 unsupported gate         E203 bad operand count or repeated operand
///                                 E204 reset on a qubit in unknown state
///                                 E205 non-static for-loop bounds
///                                 E206 guard reads an unwritten bit
///                                 E207 register size mismatch in broadcast

#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qseq::qasm {

struct SourcePos {
    int line = 0;
    int col = 0;
    /// Positions never take part in AST comparison.
    friend bool operator==(const SourcePos&, const SourcePos&) { return true; }
};

namespace code {
inline constexpr const char* kLexical = "E100";
inline constexpr const char* kSyntax = "E101";
inline constexpr const char* kUnsupportedConstruct = "E102";
inline constexpr const char* kUnsupportedGate = "E103";
inline constexpr const char* kUndeclared = "E200";
inline constexpr const char* kRedeclared = "E201";
inline constexpr const char* kIndexRange = "E202";
inline constexpr const char* kOperands = "E203";
inline constexpr const char* kResetUnknown = "E204";
inline constexpr const char* kNonStaticFor = "E205";
inline constexpr const char* kUnwrittenBit = "E206";
inline constexpr const char* kBroadcastSize = "E207";
}  // namespace code

struct Diagnostic {
    std::string code;
    std::string message;
    SourcePos pos;
};

std::ostream& operator<<(std::ostream& out, const Diagnostic& d);

/// Thrown internally by the lexer/parser/analyzer; callers see Diagnostic values.
class DiagnosticError : public std::runtime_error {
  public:
    explicit DiagnosticError(Diagnostic d) : std::runtime_error(d.message), diagnostic_(std::move(d)) {}
    const Diagnostic& diagnostic() const { return diagnostic_; }

  private:
    Diagnostic diagnostic_;
};

[[noreturn]] inline void fail(const char* c, std::string message, SourcePos pos) {
    throw DiagnosticError(Diagnostic{c, std::move(message), pos});
}

}  // namespace qseq::qasm

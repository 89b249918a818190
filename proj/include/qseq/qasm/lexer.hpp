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

/// @file lexer.hpp

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qseq/qasm/diagnostic.hpp"

namespace qseq::qasm {

enum class TokenKind { Identifier, Integer, Float, String, Symbol, End };

struct Token {
    TokenKind kind = TokenKind::End;
    /// Identifier/number spelling, string contents without quotes, or the symbol itself.
    std::string text;
    SourcePos pos;
};

/// Splits source into tokens; `//` and `/* */` comments are skipped.
/// Throws DiagnosticError (E100) on a character outside the fragment's alphabet.
std::vector<Token> tokenize(std::string_view source);

}  // namespace qseq::qasm

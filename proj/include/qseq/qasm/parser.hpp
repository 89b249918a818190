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

/// @file parser.hpp

#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "qseq/qasm/ast.hpp"
#include "qseq/qasm/diagnostic.hpp"

namespace qseq::qasm {

struct ParseResult {
    std::optional<Program> program;
    std::vector<Diagnostic> diagnostics;
    bool ok() const { return program.has_value() && diagnostics.empty(); }
};

/// Parsing stops at the first error.
ParseResult parse(std::string_view source);

}  // namespace qseq::qasm

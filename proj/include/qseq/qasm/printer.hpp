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

/// @file printer.hpp
/// @brief Canonical OpenQASM text for a syntax tree; parse(print(p)) == p.

#pragma once

#include <string>

#include "qseq/qasm/ast.hpp"

namespace qseq::qasm {

std::string print(const Program& program);

}  // namespace qseq::qasm

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

/// @file analyzer.hpp

#pragma once

#include <string_view>

#include "qseq/qasm/ast.hpp"
#include "qseq/qasm/ir.hpp"

namespace qseq::qasm {

/// Name resolution, for-loop unrolling, reset rewriting, measurement
/// classification and block partitioning. Errors land in ProgramIR::diagnostics.
ProgramIR analyze(const Program& program);

/// parse() followed by analyze(); parse diagnostics are carried over.
ProgramIR compile(std::string_view source);

}  // namespace qseq::qasm

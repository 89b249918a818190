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

#include "qseq/gate.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace qseq {

namespace {

constexpr std::array<std::string_view, 14> kNames = {"x",  "y",  "z",    "h",   "s",   "sdg", "t",
                                                      "tdg", "cx", "cz", "swap", "ccx", "mcx", "mcz"};

}  // namespace

std::string_view gate_name(GateKind kind) { return kNames[static_cast<std::size_t>(kind)]; }

std::optional<GateKind> gate_from_name(std::string_view name) {
    for (std::size_t i = 0; i < kNames.size(); ++i) {
        if (kNames[i] == name && kNames[i] != "mcx" && kNames[i] != "mcz") {
            return static_cast<GateKind>(i);
        }
    }
    return std::nullopt;
}

GateOp GateOp::single(GateKind kind, Qubit target) { return {kind, {}, {target}}; }
GateOp GateOp::cx(Qubit control, Qubit target) { return {GateKind::CX, {control}, {target}}; }
GateOp GateOp::cz(Qubit control, Qubit target) { return {GateKind::CZ, {control}, {target}}; }
GateOp GateOp::swap(Qubit a, Qubit b) { return {GateKind::Swap, {}, {a, b}}; }
GateOp GateOp::ccx(Qubit c0, Qubit c1, Qubit target) { return {GateKind::CCX, {c0, c1}, {target}}; }
GateOp GateOp::mcx(std::vector<Qubit> controls, Qubit target) {
    return {GateKind::MCX, std::move(controls), {target}};
}
GateOp GateOp::mcz(std::vector<Qubit> controls, Qubit target) {
    return {GateKind::MCZ, std::move(controls), {target}};
}

std::vector<Qubit> GateOp::operands() const {
    std::vector<Qubit> all = controls;
    all.insert(all.end(), targets.begin(), targets.end());
    return all;
}

void GateOp::validate(Qubit qubit_count) const {
    std::size_t want_controls = 0;
    std::size_t want_targets = 1;
    bool any_controls = false;
    switch (kind) {
        case GateKind::CX:
        case GateKind::CZ:
            want_controls = 1;
            break;
        case GateKind::CCX:
            want_controls = 2;
            break;
        case GateKind::Swap:
            want_targets = 2;
            break;
        case GateKind::MCX:
        case GateKind::MCZ:
            any_controls = true;
            break;
        default:
            break;
    }
    if (targets.size() != want_targets || (!any_controls && controls.size() != want_controls)) {
        throw std::invalid_argument("gate " + std::string(gate_name(kind)) + ": wrong number of operands");
    }
    std::vector<Qubit> all = operands();
    for (Qubit q : all) {
        if (q >= qubit_count) {
            throw std::invalid_argument("gate " + std::string(gate_name(kind)) + ": qubit " +
                                        std::to_string(q) + " out of range");
        }
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
        throw std::invalid_argument("gate " + std::string(gate_name(kind)) + ": repeated operand");
    }
}

GateOp GateOp::inverse() const {
    GateOp g = *this;
    switch (kind) {
        case GateKind::S: g.kind = GateKind::Sdg; break;
        case GateKind::Sdg: g.kind = GateKind::S; break;
        case GateKind::T: g.kind = GateKind::Tdg; break;
        case GateKind::Tdg: g.kind = GateKind::T; break;
        default: break;
    }
    return g;
}

std::ostream& operator<<(std::ostream& out, const GateOp& g) {
    out << gate_name(g.kind);
    const char* sep = " ";
    for (Qubit q : g.operands()) {
        out << sep << "q" << q;
        sep = ",";
    }
    return out;
}

}  // namespace qseq

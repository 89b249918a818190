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

#include "qseq/qasm/ir.hpp"

#include <sstream>

namespace qseq::qasm {

std::string ProgramIR::qubit_name(Qubit q) const {
    for (const QubitRegister& r : qregs) {
        if (q >= r.offset && q < r.offset + r.size) {
            return r.scalar ? r.name : r.name + "[" + std::to_string(q - r.offset) + "]";
        }
    }
    return "q" + std::to_string(q);
}

void for_each_op(const BlockTree& tree, const std::function<void(const Op&)>& fn) {
    for (const Block& b : tree.blocks) {
        if (const auto* c = std::get_if<Cqc>(&b.node)) {
            for (const Op& op : c->ops) fn(op);
        } else if (const auto* d = std::get_if<Dqc>(&b.node)) {
            for (const Branch& br : d->branches) for_each_op(br.body, fn);
            for_each_op(d->otherwise, fn);
        } else {
            for_each_op(std::get<Sqc>(b.node).body, fn);
        }
    }
}

namespace {

void describe_tree(const ProgramIR& ir, const BlockTree& tree, int depth, std::ostringstream& out) {
    const std::string pad(2 * depth, ' ');
    for (const Block& b : tree.blocks) {
        if (const auto* c = std::get_if<Cqc>(&b.node)) {
            out << pad << "CQC (" << c->ops.size() << " ops)\n";
            for (const Op& op : c->ops) {
                out << pad << "  ";
                if (const auto* g = std::get_if<GateOp>(&op.node)) {
                    out << gate_name(g->kind);
                    const char* sep = " ";
                    for (Qubit q : g->operands()) {
                        out << sep << ir.qubit_name(q);
                        sep = ", ";
                    }
                } else if (const auto* m = std::get_if<MeasureOp>(&op.node)) {
                    out << "measure " << ir.qubit_name(m->qubit);
                    if (m->bit) out << " -> " << ir.bit_names[*m->bit];
                    out << (m->mid ? "  [mid]" : "  [final]");
                } else {
                    out << "reset " << ir.qubit_name(std::get<ResetOp>(op.node).qubit);
                }
                out << "\n";
            }
        } else if (const auto* d = std::get_if<Dqc>(&b.node)) {
            out << pad << "DQC on " << d->text << "\n";
            for (const Branch& br : d->branches) {
                out << pad << "  case";
                for (std::uint64_t v : br.values) out << " " << v;
                out << ":\n";
                describe_tree(ir, br.body, depth + 2, out);
            }
            if (!d->otherwise.blocks.empty()) {
                out << pad << "  otherwise:\n";
                describe_tree(ir, d->otherwise, depth + 2, out);
            }
        } else {
            const Sqc& s = std::get<Sqc>(b.node);
            out << pad << "SQC while (" << s.guard.text << ")\n";
            describe_tree(ir, s.body, depth + 1, out);
        }
    }
}

}  // namespace

std::string describe(const ProgramIR& ir) {
    std::ostringstream out;
    out << "qubits: " << ir.num_qubits << ", bits: " << ir.bit_count() << "\n";
    describe_tree(ir, ir.blocks, 0, out);
    return out.str();
}

}  // namespace qseq::qasm

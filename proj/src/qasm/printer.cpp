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

#include "qseq/qasm/printer.hpp"

#include <sstream>

namespace qseq::qasm {

namespace {

std::string index_text(const IndexExpr& e) {
    if (!e.var) {
        return std::to_string(e.offset);
    }
    if (e.offset > 0) return *e.var + " + " + std::to_string(e.offset);
    if (e.offset < 0) return *e.var + " - " + std::to_string(-e.offset);
    return *e.var;
}

std::string operand_text(const Operand& o) {
    return o.index ? o.name + "[" + index_text(*o.index) + "]" : o.name;
}

std::string condition_text(const Condition& c) {
    return operand_text(c.lhs) + (c.equal ? " == " : " != ") + std::to_string(c.value);
}

class Printer {
  public:
    std::string take() { return out_.str(); }

    void body(const Body& stmts, int depth) {
        for (const Statement& s : stmts) {
            statement(s, depth);
        }
    }

  private:
    std::ostringstream out_;

    void line(int depth, const std::string& text) { out_ << std::string(4 * depth, ' ') << text << "\n"; }

    void braced(const Body& b, int depth) {
        body(b, depth + 1);
    }

    void statement(const Statement& s, int depth) {
        std::visit([&](const auto& node) { emit(node, depth); }, s.node);
    }

    void emit(const VersionStmt& v, int d) { line(d, "OPENQASM " + v.version + ";"); }
    void emit(const IncludeStmt& i, int d) { line(d, "include \"" + i.path + "\";"); }
    void emit(const QubitDecl& q, int d) {
        line(d, q.size ? "qubit[" + std::to_string(*q.size) + "] " + q.name + ";" : "qubit " + q.name + ";");
    }
    void emit(const BitDecl& b, int d) {
        std::string text = b.size ? "bit[" + std::to_string(*b.size) + "] " + b.name : "bit " + b.name;
        if (b.init) {
            text += b.init->quoted ? " = \"" + b.init->digits + "\"" : " = " + b.init->digits;
        }
        line(d, text + ";");
    }
    void emit(const GateStmt& g, int d) {
        std::string text;
        if (g.ctrl == 1) {
            text = "ctrl @ ";
        } else if (g.ctrl > 1) {
            text = "ctrl(" + std::to_string(g.ctrl) + ") @ ";
        }
        text += g.name;
        const char* sep = " ";
        for (const Operand& o : g.operands) {
            text += sep + operand_text(o);
            sep = ", ";
        }
        line(d, text + ";");
    }
    void emit(const MeasureStmt& m, int d) {
        if (!m.target) {
            line(d, "measure " + operand_text(m.qubit) + ";");
        } else if (m.arrow) {
            line(d, "measure " + operand_text(m.qubit) + " -> " + operand_text(*m.target) + ";");
        } else {
            line(d, operand_text(*m.target) + " = measure " + operand_text(m.qubit) + ";");
        }
    }
    void emit(const ResetStmt& r, int d) { line(d, "reset " + operand_text(r.qubit) + ";"); }
    void emit(const BarrierStmt& b, int d) {
        std::string text = "barrier";
        const char* sep = " ";
        for (const Operand& o : b.operands) {
            text += sep + operand_text(o);
            sep = ", ";
        }
        line(d, text + ";");
    }
    void emit(const IfStmt& s, int d) {
        line(d, "if (" + condition_text(s.cond) + ") {");
        braced(s.then_body, d);
        if (s.else_body) {
            line(d, "} else {");
            braced(*s.else_body, d);
        }
        line(d, "}");
    }
    void emit(const SwitchStmt& s, int d) {
        line(d, "switch (" + operand_text(s.selector) + ") {");
        for (const SwitchCase& c : s.cases) {
            std::string values;
            for (std::size_t i = 0; i < c.values.size(); ++i) {
                values += (i ? ", " : "") + std::to_string(c.values[i]);
            }
            line(d + 1, "case " + values + " {");
            braced(c.body, d + 1);
            line(d + 1, "}");
        }
        if (s.default_body) {
            line(d + 1, "default {");
            braced(*s.default_body, d + 1);
            line(d + 1, "}");
        }
        line(d, "}");
    }
    void emit(const ForStmt& f, int d) {
        std::string head = "for ";
        if (!f.type.empty()) head += f.type + " ";
        line(d, head + f.var + " in [" + index_text(f.lo) + ":" + index_text(f.hi) + "] {");
        braced(f.body, d);
        line(d, "}");
    }
    void emit(const WhileStmt& w, int d) {
        line(d, "while (" + condition_text(w.cond) + ") {");
        braced(w.body, d);
        line(d, "}");
    }
};

}  // namespace

std::string print(const Program& program) {
    Printer p;
    p.body(program.statements, 0);
    return p.take();
}

}  // namespace qseq::qasm

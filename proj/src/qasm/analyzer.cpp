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

#include "qseq/qasm/analyzer.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "qseq/qasm/parser.hpp"

namespace qseq::qasm {

namespace {

constexpr std::uint64_t kMaxUnrolledIterations = 1u << 20;

bool is_declaration(const Statement& s) {
    return std::holds_alternative<QubitDecl>(s.node) || std::holds_alternative<BitDecl>(s.node);
}

void push_op(BlockTree& tree, Op op) {
    if (tree.blocks.empty() || !std::holds_alternative<Cqc>(tree.blocks.back().node)) {
        tree.blocks.push_back(Block{Cqc{}});
    }
    std::get<Cqc>(tree.blocks.back().node).ops.push_back(std::move(op));
}

// ---------------------------------------------------------------------------
// Pass 1: name resolution, unrolling, broadcast, block construction.

class Lowering {
  public:
    explicit Lowering(ProgramIR& ir) : ir_(ir) {}

    void program(const Program& p) {
        for (const Statement& s : p.statements) {
            if (is_declaration(s)) {
                declare(s);
            }
        }
        written_.assign(ir_.bit_count(), false);
        for (BitIndex b = 0; b < ir_.bit_count(); ++b) {
            written_[b] = ir_.initial_bits[b].has_value();
        }
        lower(p.statements, ir_.blocks, true);
    }

  private:
    struct Resolved {
        std::vector<std::uint32_t> indices;  // flat qubit or bit numbers
        bool whole_register = false;
    };

    ProgramIR& ir_;
    std::map<std::string, std::size_t, std::less<>> qregs_;
    std::map<std::string, std::size_t, std::less<>> cregs_;
    std::map<std::string, std::int64_t, std::less<>> loop_vars_;
    std::vector<bool> written_;
    std::uint64_t unrolled_ = 0;

    bool name_taken(const std::string& name) const {
        return qregs_.count(name) || cregs_.count(name) || loop_vars_.count(name);
    }

    void declare(const Statement& s) {
        if (const auto* q = std::get_if<QubitDecl>(&s.node)) {
            if (name_taken(q->name)) {
                fail(code::kRedeclared, "redeclaration of '" + q->name + "'", s.pos);
            }
            qregs_[q->name] = ir_.qregs.size();
            ir_.qregs.push_back({q->name, ir_.num_qubits, q->size.value_or(1), !q->size.has_value()});
            ir_.num_qubits += q->size.value_or(1);
            return;
        }
        const auto& b = std::get<BitDecl>(s.node);
        if (name_taken(b.name)) {
            fail(code::kRedeclared, "redeclaration of '" + b.name + "'", s.pos);
        }
        const std::uint32_t size = b.size.value_or(1);
        cregs_[b.name] = ir_.cregs.size();
        ir_.cregs.push_back({b.name, ir_.bit_count(), size, !b.size.has_value()});
        std::vector<std::optional<std::uint8_t>> init(size);
        if (b.init) {
            if (b.init->quoted) {
                // "0101": leftmost character is the most significant bit.
                if (b.init->digits.size() != size ||
                    b.init->digits.find_first_not_of("01") != std::string::npos) {
                    fail(code::kSyntax,
                         "initializer for '" + b.name + "' must be a string of " + std::to_string(size) + " binary digits",
                         s.pos);
                }
                for (std::uint32_t i = 0; i < size; ++i) {
                    init[i] = static_cast<std::uint8_t>(b.init->digits[size - 1 - i] - '0');
                }
            } else {
                std::uint64_t v = std::stoull(b.init->digits);
                if (size < 64 && (v >> size) != 0) {
                    fail(code::kSyntax, "initializer " + b.init->digits + " does not fit in '" + b.name + "'", s.pos);
                }
                for (std::uint32_t i = 0; i < size; ++i) {
                    init[i] = static_cast<std::uint8_t>(i < 64 ? (v >> i) & 1u : 0u);
                }
            }
        }
        for (std::uint32_t i = 0; i < size; ++i) {
            ir_.bit_names.push_back(b.size ? b.name + "[" + std::to_string(i) + "]" : b.name);
            ir_.initial_bits.push_back(init[i]);
        }
    }

    std::int64_t eval(const IndexExpr& e, SourcePos pos) const {
        if (!e.var) {
            return e.offset;
        }
        auto it = loop_vars_.find(*e.var);
        if (it == loop_vars_.end()) {
            if (name_taken(*e.var)) {
                fail(code::kUnsupportedConstruct, "'" + *e.var + "' is not a loop variable", pos);
            }
            fail(code::kUndeclared, "undeclared identifier '" + *e.var + "'", pos);
        }
        return it->second + e.offset;
    }

    template <typename Reg>
    Resolved resolve(const Operand& o, const std::map<std::string, std::size_t, std::less<>>& table,
                     const std::vector<Reg>& regs, const char* kind) const {
        auto it = table.find(o.name);
        if (it == table.end()) {
            const bool other = (&table == &qregs_) ? cregs_.count(o.name) != 0 : qregs_.count(o.name) != 0;
            if (other) {
                fail(code::kOperands, "'" + o.name + "' is not a " + kind, o.pos);
            }
            fail(code::kUndeclared, std::string("undeclared ") + kind + " '" + o.name + "'", o.pos);
        }
        const Reg& reg = regs[it->second];
        Resolved r;
        if (o.index) {
            if (reg.scalar) {
                fail(code::kIndexRange, "'" + o.name + "' is not a register and cannot be indexed", o.pos);
            }
            std::int64_t i = eval(*o.index, o.pos);
            if (i < 0 || i >= static_cast<std::int64_t>(reg.size)) {
                fail(code::kIndexRange,
                     "index " + std::to_string(i) + " out of range for '" + o.name + "' of size " +
                         std::to_string(reg.size),
                     o.pos);
            }
            r.indices.push_back(reg.offset + static_cast<std::uint32_t>(i));
        } else {
            r.whole_register = !reg.scalar;
            for (std::uint32_t i = 0; i < reg.size; ++i) r.indices.push_back(reg.offset + i);
        }
        return r;
    }

    Resolved qubits(const Operand& o) const { return resolve(o, qregs_, ir_.qregs, "qubit"); }
    Resolved bits(const Operand& o) const { return resolve(o, cregs_, ir_.cregs, "bit"); }

    /// Expands register operands into parallel applications; all registers must agree in size.
    static std::vector<std::vector<std::uint32_t>> broadcast(const std::vector<Resolved>& ops,
                                                             const std::vector<Operand>& src) {
        std::optional<std::size_t> width;
        for (std::size_t i = 0; i < ops.size(); ++i) {
            if (ops[i].whole_register) {
                if (width && *width != ops[i].indices.size()) {
                    fail(code::kBroadcastSize, "registers of different sizes in one statement", src[i].pos);
                }
                width = ops[i].indices.size();
            }
        }
        std::vector<std::vector<std::uint32_t>> out(width.value_or(1));
        for (std::size_t k = 0; k < out.size(); ++k) {
            for (const Resolved& r : ops) {
                out[k].push_back(r.whole_register ? r.indices[k] : r.indices[0]);
            }
        }
        return out;
    }

    Guard guard(const Condition& c) {
        Guard g;
        g.bits = bits(c.lhs).indices;
        g.equal = c.equal;
        g.value = c.value;
        g.text = (c.lhs.index ? ir_.bit_names[g.bits[0]] : c.lhs.name) + (c.equal ? " == " : " != ") +
                 std::to_string(c.value);
        check_written(g.bits, c.lhs.pos);
        return g;
    }

    void check_written(const std::vector<BitIndex>& bits, SourcePos pos) const {
        for (BitIndex b : bits) {
            if (!written_[b]) {
                fail(code::kUnwrittenBit, "guard reads bit '" + ir_.bit_names[b] + "' before it is written", pos);
            }
        }
    }

    void lower(const Body& body, BlockTree& out, bool top) {
        for (const Statement& s : body) {
            if (is_declaration(s)) {
                if (!top) {
                    fail(code::kUnsupportedConstruct, "declarations must appear at the top level", s.pos);
                }
                continue;
            }
            std::visit([&](const auto& node) { lower_node(node, s.pos, out); }, s.node);
        }
    }

    void lower_node(const QubitDecl&, SourcePos, BlockTree&) {}
    void lower_node(const BitDecl&, SourcePos, BlockTree&) {}
    void lower_node(const VersionStmt&, SourcePos, BlockTree&) {}
    void lower_node(const IncludeStmt&, SourcePos, BlockTree&) {}

    void lower_node(const BarrierStmt& b, SourcePos, BlockTree&) {
        for (const Operand& o : b.operands) qubits(o);
    }

    void lower_node(const GateStmt& g, SourcePos pos, BlockTree& out) {
        GateKind kind = *gate_from_name(g.name);
        std::size_t base = 1;
        switch (kind) {
            case GateKind::CX:
            case GateKind::CZ:
            case GateKind::Swap: base = 2; break;
            case GateKind::CCX: base = 3; break;
            default: break;
        }
        const std::size_t want = base + g.ctrl;
        if (g.operands.size() != want) {
            fail(code::kOperands,
                 "gate '" + g.name + "' expects " + std::to_string(want) + " operands, got " +
                     std::to_string(g.operands.size()),
                 pos);
        }
        std::vector<Resolved> ops;
        for (const Operand& o : g.operands) ops.push_back(qubits(o));
        for (const std::vector<std::uint32_t>& q : broadcast(ops, g.operands)) {
            GateOp op;
            if (g.ctrl == 0) {
                op.kind = kind;
                op.controls.assign(q.begin(), q.end() - (kind == GateKind::Swap ? 2 : 1));
                op.targets.assign(q.end() - (kind == GateKind::Swap ? 2 : 1), q.end());
            } else {
                const bool is_x = kind == GateKind::X;
                op.kind = g.ctrl == 1 ? (is_x ? GateKind::CX : GateKind::CZ)
                                      : (g.ctrl == 2 && is_x ? GateKind::CCX : (is_x ? GateKind::MCX : GateKind::MCZ));
                op.controls.assign(q.begin(), q.end() - 1);
                op.targets = {q.back()};
            }
            std::vector<Qubit> all = op.operands();
            std::sort(all.begin(), all.end());
            if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
                fail(code::kOperands, "gate '" + g.name + "' uses the same qubit twice", pos);
            }
            push_op(out, Op{op, pos});
        }
    }

    void lower_node(const MeasureStmt& m, SourcePos pos, BlockTree& out) {
        Resolved q = qubits(m.qubit);
        if (!m.target) {
            for (std::uint32_t qi : q.indices) push_op(out, Op{MeasureOp{0, qi, std::nullopt, false}, pos});
            return;
        }
        Resolved c = bits(*m.target);
        if (q.indices.size() != c.indices.size()) {
            fail(code::kBroadcastSize,
                 "measuring " + std::to_string(q.indices.size()) + " qubit(s) into " + std::to_string(c.indices.size()) +
                     " bit(s)",
                 pos);
        }
        for (std::size_t i = 0; i < q.indices.size(); ++i) {
            push_op(out, Op{MeasureOp{0, q.indices[i], c.indices[i], false}, pos});
            written_[c.indices[i]] = true;
        }
    }

    void lower_node(const ResetStmt& r, SourcePos pos, BlockTree& out) {
        for (std::uint32_t q : qubits(r.qubit).indices) push_op(out, Op{ResetOp{q}, pos});
    }

    void lower_node(const IfStmt& s, SourcePos pos, BlockTree& out) {
        Guard g = guard(s.cond);
        Dqc d;
        d.selector = g.bits;
        d.text = g.text;
        d.pos = pos;
        BlockTree then_tree;
        BlockTree else_tree;
        const std::vector<bool> before = written_;
        lower(s.then_body, then_tree, false);
        std::vector<bool> after_then = written_;
        written_ = before;
        if (s.else_body) lower(*s.else_body, else_tree, false);
        for (std::size_t b = 0; b < written_.size(); ++b) written_[b] = written_[b] && after_then[b];
        if (g.equal) {
            d.branches.push_back({{g.value}, std::move(then_tree)});
            d.otherwise = std::move(else_tree);
        } else {
            d.branches.push_back({{g.value}, std::move(else_tree)});
            d.otherwise = std::move(then_tree);
        }
        out.blocks.push_back(Block{std::move(d)});
    }

    void lower_node(const SwitchStmt& s, SourcePos pos, BlockTree& out) {
        Dqc d;
        d.selector = bits(s.selector).indices;
        check_written(d.selector, s.selector.pos);
        d.text = s.selector.name;
        d.pos = pos;
        const std::vector<bool> before = written_;
        std::vector<bool> meet(written_.size(), true);
        auto arm = [&](const Body& body, BlockTree& tree) {
            written_ = before;
            lower(body, tree, false);
            for (std::size_t b = 0; b < meet.size(); ++b) meet[b] = meet[b] && written_[b];
        };
        for (const SwitchCase& c : s.cases) {
            Branch br{c.values, {}};
            arm(c.body, br.body);
            d.branches.push_back(std::move(br));
        }
        if (s.default_body) {
            arm(*s.default_body, d.otherwise);
        } else {
            for (std::size_t b = 0; b < meet.size(); ++b) meet[b] = meet[b] && before[b];
        }
        written_ = meet;
        out.blocks.push_back(Block{std::move(d)});
    }

    void lower_node(const ForStmt& f, SourcePos pos, BlockTree& out) {
        if (f.lo.var || f.hi.var) {
            fail(code::kNonStaticFor, "for-loop bounds must be integer literals", pos);
        }
        if (name_taken(f.var)) {
            fail(code::kRedeclared, "loop variable '" + f.var + "' shadows an existing name", pos);
        }
        if (f.hi.offset >= f.lo.offset) {
            unrolled_ += static_cast<std::uint64_t>(f.hi.offset - f.lo.offset + 1);
            if (unrolled_ > kMaxUnrolledIterations) {
                fail(code::kUnsupportedConstruct, "for-loop unrolling exceeds 2^20 iterations", pos);
            }
        }
        for (std::int64_t i = f.lo.offset; i <= f.hi.offset; ++i) {
            loop_vars_[f.var] = i;
            lower(f.body, out, false);
        }
        loop_vars_.erase(f.var);
        if (f.hi.offset < f.lo.offset) {
            // Still resolve names in an empty loop so typos are reported.
            loop_vars_[f.var] = f.lo.offset;
            BlockTree scratch;
            const std::vector<bool> saved = written_;
            lower(f.body, scratch, false);
            written_ = saved;
            loop_vars_.erase(f.var);
        }
    }

    void lower_node(const WhileStmt& w, SourcePos pos, BlockTree& out) {
        Sqc loop;
        loop.guard = guard(w.cond);
        loop.pos = pos;
        const std::vector<bool> before = written_;
        lower(w.body, loop.body, false);
        written_ = before;  // zero iterations are possible
        out.blocks.push_back(Block{std::move(loop)});
    }
};

// ---------------------------------------------------------------------------
// Pass 2: reset rewriting by known-state tracking.

struct Known {
    enum Kind { Zero, Measured, Unknown } kind = Zero;
    BitIndex bit = 0;
    friend bool operator==(const Known&, const Known&) = default;
};

using KnownStates = std::vector<Known>;

KnownStates merge(const KnownStates& a, const KnownStates& b) {
    KnownStates out = a;
    for (std::size_t q = 0; q < out.size(); ++q) {
        if (!(a[q] == b[q])) out[q] = {Known::Unknown, 0};
    }
    return out;
}

class ResetRewriter {
  public:
    explicit ResetRewriter(const ProgramIR& ir) : ir_(ir) {}

    /// Rewrites `in`; when `report` is false only the state transfer is computed.
    BlockTree run(const BlockTree& in, KnownStates& st, bool report) {
        BlockTree out;
        for (const Block& b : in.blocks) {
            if (const auto* c = std::get_if<Cqc>(&b.node)) {
                for (const Op& op : c->ops) step(op, out, st, report);
            } else if (const auto* d = std::get_if<Dqc>(&b.node)) {
                Dqc nd = *d;
                KnownStates acc;
                bool first = true;
                auto arm = [&](const BlockTree& body, BlockTree& dest) {
                    KnownStates s = st;
                    dest = run(body, s, report);
                    acc = first ? s : merge(acc, s);
                    first = false;
                };
                for (std::size_t i = 0; i < d->branches.size(); ++i) arm(d->branches[i].body, nd.branches[i].body);
                arm(d->otherwise, nd.otherwise);
                st = acc;
                out.blocks.push_back(Block{std::move(nd)});
            } else {
                const Sqc& loop = std::get<Sqc>(b.node);
                KnownStates entry = st;
                for (;;) {
                    KnownStates s = entry;
                    run(loop.body, s, false);
                    KnownStates next = merge(entry, s);
                    if (next == entry) break;
                    entry = next;
                }
                Sqc nl = loop;
                KnownStates s = entry;
                nl.body = run(loop.body, s, report);
                st = entry;
                out.blocks.push_back(Block{std::move(nl)});
            }
        }
        return out;
    }

  private:
    const ProgramIR& ir_;

    void step(const Op& op, BlockTree& out, KnownStates& st, bool report) {
        if (const auto* g = std::get_if<GateOp>(&op.node)) {
            for (Qubit q : g->operands()) st[q] = {Known::Unknown, 0};
            push_op(out, op);
        } else if (const auto* m = std::get_if<MeasureOp>(&op.node)) {
            if (m->bit) {
                for (Known& k : st) {
                    if (k.kind == Known::Measured && k.bit == *m->bit) k = {Known::Unknown, 0};
                }
                st[m->qubit] = {Known::Measured, *m->bit};
            } else {
                st[m->qubit] = {Known::Unknown, 0};
            }
            push_op(out, op);
        } else {
            const Qubit q = std::get<ResetOp>(op.node).qubit;
            const Known k = st[q];
            if (k.kind == Known::Unknown) {
                if (report) {
                    fail(code::kResetUnknown,
                         "reset of " + ir_.qubit_name(q) +
                             " whose value is not classically known (reset is only supported right after "
                             "measuring the qubit or before it is used)",
                         op.pos);
                }
            } else if (k.kind == Known::Measured) {
                Dqc d;
                d.selector = {k.bit};
                d.text = ir_.bit_names[k.bit] + " == 1";
                d.pos = op.pos;
                BlockTree flip;
                push_op(flip, Op{GateOp::single(GateKind::X, q), op.pos});
                d.branches.push_back({{1}, std::move(flip)});
                out.blocks.push_back(Block{std::move(d)});
            }
            st[q] = {Known::Zero, 0};
        }
    }
};

// ---------------------------------------------------------------------------
// Pass 3: measurement numbering and mid/final classification.

class Classifier {
  public:
    explicit Classifier(ProgramIR& ir)
        : ir_(ir), last_touch_(ir.num_qubits, -1), last_read_(ir.bit_count(), -1) {}

    void run() {
        scan(ir_.blocks, false);
        for (MeasurementInfo& m : ir_.measurements) {
            const std::int64_t seq = seq_of_[m.id];
            m.mid = m.in_loop || last_touch_[m.qubit] > seq || (m.bit && last_read_[*m.bit] > seq);
        }
        patch(ir_.blocks);
    }

  private:
    ProgramIR& ir_;
    std::int64_t seq_ = 0;
    std::vector<std::int64_t> last_touch_;
    std::vector<std::int64_t> last_read_;
    std::vector<std::int64_t> seq_of_;

    void read(const std::vector<BitIndex>& bits) {
        for (BitIndex b : bits) last_read_[b] = seq_;
        ++seq_;
    }

    void scan(BlockTree& tree, bool in_loop) {
        for (Block& b : tree.blocks) {
            if (auto* c = std::get_if<Cqc>(&b.node)) {
                for (Op& op : c->ops) {
                    if (auto* g = std::get_if<GateOp>(&op.node)) {
                        for (Qubit q : g->operands()) last_touch_[q] = seq_;
                    } else {
                        auto& m = std::get<MeasureOp>(op.node);
                        m.id = static_cast<std::uint32_t>(ir_.measurements.size());
                        ir_.measurements.push_back({m.id, m.qubit, m.bit, false, in_loop, op.pos});
                        seq_of_.push_back(seq_);
                        last_touch_[m.qubit] = seq_;
                    }
                    ++seq_;
                }
            } else if (auto* d = std::get_if<Dqc>(&b.node)) {
                read(d->selector);
                for (Branch& br : d->branches) scan(br.body, in_loop);
                scan(d->otherwise, in_loop);
            } else {
                auto& loop = std::get<Sqc>(b.node);
                read(loop.guard.bits);
                scan(loop.body, true);
            }
        }
    }

    void patch(BlockTree& tree) {
        for (Block& b : tree.blocks) {
            if (auto* c = std::get_if<Cqc>(&b.node)) {
                for (Op& op : c->ops) {
                    if (auto* m = std::get_if<MeasureOp>(&op.node)) m->mid = ir_.measurements[m->id].mid;
                }
            } else if (auto* d = std::get_if<Dqc>(&b.node)) {
                for (Branch& br : d->branches) patch(br.body);
                patch(d->otherwise);
            } else {
                patch(std::get<Sqc>(b.node).body);
            }
        }
    }
};

}  // namespace

ProgramIR analyze(const Program& program) {
    ProgramIR ir;
    try {
        Lowering(ir).program(program);
        KnownStates st(ir.num_qubits);
        ir.blocks = ResetRewriter(ir).run(ir.blocks, st, true);
        Classifier(ir).run();
    } catch (const DiagnosticError& e) {
        ir.diagnostics.push_back(e.diagnostic());
        ir.blocks = {};
        ir.measurements.clear();
    }
    return ir;
}

ProgramIR compile(std::string_view source) {
    ParseResult parsed = parse(source);
    if (!parsed.ok()) {
        ProgramIR ir;
        ir.diagnostics = std::move(parsed.diagnostics);
        return ir;
    }
    return analyze(*parsed.program);
}

}  // namespace qseq::qasm

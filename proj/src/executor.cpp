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

#include "qseq/executor.hpp"

#include <algorithm>
#include <chrono>
#include <memory>

namespace qseq {

using qasm::BitIndex;
using qasm::BlockTree;
using qasm::ProgramIR;

std::string_view status_name(RunStatus s) {
    switch (s) {
        case RunStatus::Ok: return "ok";
        case RunStatus::MaxIter: return "max_iter";
        case RunStatus::Unreachable: return "unreachable";
    }
    return "?";
}

ClassicalStore::ClassicalStore(const ProgramIR& ir) : values_(ir.initial_bits), names_(ir.bit_names) {}

void ClassicalStore::set(BitIndex b, std::uint8_t v) {
    values_.at(b) = v;
    history_.emplace_back(b, v);
}

std::uint64_t ClassicalStore::read(std::span<const BitIndex> bits) const {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        const std::optional<std::uint8_t>& bit = values_.at(bits[i]);
        if (!bit) {
            throw RuntimeError("guard reads unmeasured bit '" + names_.at(bits[i]) + "'");
        }
        if (*bit && i < 64) v |= std::uint64_t{1} << i;
    }
    return v;
}

bool guard_eval(const ClassicalStore& store, const qasm::Guard& guard) {
    // Registers wider than 64 bits compare their high part against zero.
    std::uint64_t v = store.read(guard.bits);
    bool high_set = false;
    for (std::size_t i = 64; i < guard.bits.size(); ++i) high_set = high_set || *store.get(guard.bits[i]);
    const bool eq = !high_set && v == guard.value;
    return guard.equal ? eq : !eq;
}

namespace {

/// Where measurement outcomes come from.
class OutcomeSource {
  public:
    OutcomeSource(Mode mode, std::vector<std::uint8_t> preset, std::uint64_t seed)
        : mode_(mode), preset_(std::move(preset)), rng_(seed) {}

    /// Picks an outcome given the joint probabilities of the two branches.
    std::uint8_t choose(const RootTwoRational& p0, const RootTwoRational& p1) {
        if (mode_ == Mode::Preset) {
            if (next_ >= preset_.size()) {
                throw RuntimeError("preset outcome list exhausted after " + std::to_string(preset_.size()) +
                                   " measurement(s)");
            }
            return preset_[next_++];
        }
        const double threshold = (p1 / (p0 + p1)).to_double();
        const double u = static_cast<double>(rng_() >> 11) * 0x1.0p-53;
        return u < threshold ? 1 : 0;
    }

  private:
    Mode mode_;
    std::vector<std::uint8_t> preset_;
    std::size_t next_ = 0;
    std::mt19937_64 rng_;
};

/// Block-tree interpreter over one state; also drives the body of run_sqc.
class Machine {
  public:
    Machine(SymbolicState state, ClassicalStore store, OutcomeSource source, std::uint64_t max_iterations)
        : state_(std::move(state)),
          store_(std::move(store)),
          source_(std::move(source)),
          max_iterations_(max_iterations) {}

    /// Measurements of qubits below this index are skipped and their bits recorded.
    Qubit skip_below = 0;
    std::vector<std::pair<Qubit, BitIndex>> skipped;

    SymbolicState state_;
    RootTwoRational p_global_ = 1;
    ClassicalStore store_;
    std::vector<MeasurementEvent> events_;
    std::vector<qasm::MeasureOp> deferred_;
    std::vector<std::uint64_t> loop_iterations_;
    std::uint64_t total_iterations_ = 0;
    RunStatus status_ = RunStatus::Ok;

    /// Returns false once the run must stop (unreachable path or iteration bound).
    bool exec(const BlockTree& tree) {
        for (const qasm::Block& b : tree.blocks) {
            if (const auto* c = std::get_if<qasm::Cqc>(&b.node)) {
                for (const qasm::Op& op : c->ops) {
                    if (!exec_op(op)) return false;
                }
            } else if (const auto* d = std::get_if<qasm::Dqc>(&b.node)) {
                const std::uint64_t v = store_.read(d->selector);
                const BlockTree* chosen = &d->otherwise;
                for (const qasm::Branch& br : d->branches) {
                    if (std::find(br.values.begin(), br.values.end(), v) != br.values.end()) {
                        chosen = &br.body;
                        break;
                    }
                }
                if (!exec(*chosen)) return false;
            } else {
                const auto& loop = std::get<qasm::Sqc>(b.node);
                std::uint64_t iterations = 0;
                bool ok = true;
                while (guard_eval(store_, loop.guard)) {
                    if (total_iterations_ >= max_iterations_) {
                        status_ = RunStatus::MaxIter;
                        ok = false;
                        break;
                    }
                    ++iterations;
                    ++total_iterations_;
                    if (!exec(loop.body)) {
                        ok = false;
                        break;
                    }
                }
                loop_iterations_.push_back(iterations);
                if (!ok) return false;
            }
        }
        return true;
    }

    /// HandleMeasure: exact conditional, outcome choice, projection, store update.
    bool measure(Qubit q, std::optional<BitIndex> bit, std::uint32_t id) {
        auto [p0, p1] = get_prob(state_, q);
        const RootTwoRational total = p0 + p1;
        const std::uint8_t b = source_.choose(p0, p1);
        const RootTwoRational& joint = b ? p1 : p0;
        state_ = mid_measure(state_, q, b != 0);
        if (bit) store_.set(*bit, b);
        if (joint.is_zero()) {
            events_.push_back({id, q, b, RootTwoRational(0)});
            p_global_ = 0;
            status_ = RunStatus::Unreachable;
            return false;
        }
        const RootTwoRational conditional = joint / total;
        p_global_ *= conditional;
        events_.push_back({id, q, b, conditional});
        return true;
    }

  private:
    OutcomeSource source_;
    std::uint64_t max_iterations_;

    bool exec_op(const qasm::Op& op) {
        if (const auto* g = std::get_if<GateOp>(&op.node)) {
            state_ = apply_gate(state_, *g);
            return true;
        }
        if (std::holds_alternative<qasm::ResetOp>(op.node)) {
            throw std::logic_error("reset survived analysis");
        }
        const auto& m = std::get<qasm::MeasureOp>(op.node);
        if (m.qubit < skip_below) {
            if (m.bit) skipped.emplace_back(m.qubit, *m.bit);
            return true;
        }
        if (!m.mid) {
            deferred_.push_back(m);
            return true;
        }
        return measure(m.qubit, m.bit, m.id);
    }
};

std::vector<DeferredMeasurement> marginals(const Machine& m) {
    std::vector<DeferredMeasurement> out;
    for (const qasm::MeasureOp& op : m.deferred_) {
        DeferredMeasurement d{op.id, op.qubit, op.bit, RootTwoRational(0), RootTwoRational(0)};
        if (!m.p_global_.is_zero()) {
            auto [p0, p1] = get_prob(m.state_, op.qubit);
            d.p0 = p0 / m.p_global_;
            d.p1 = p1 / m.p_global_;
        }
        out.push_back(std::move(d));
    }
    return out;
}

void check_ir(const ProgramIR& ir) {
    if (!ir.ok()) {
        throw std::invalid_argument("program has diagnostics");
    }
}

}  // namespace

RunResult run(const ProgramIR& ir, const RunConfig& cfg) {
    check_ir(ir);
    const auto start = std::chrono::steady_clock::now();
    auto manager = std::make_shared<bdd::Manager>(ir.num_qubits);
    SymbolicState init = init_basis(manager, std::string(ir.num_qubits, '0'), 0, std::max(2u, cfg.r_init));
    Machine m(std::move(init), ClassicalStore(ir), OutcomeSource(cfg.mode, cfg.preset, cfg.seed),
              cfg.max_iterations);
    m.exec(ir.blocks);

    RunResult r{m.state_, m.p_global_, m.store_, m.events_, marginals(m), m.loop_iterations_, m.total_iterations_,
                m.status_, {}};
    r.stats.peak_nodes = manager->allocated_nodes();
    r.stats.slice_nodes = r.state.node_count();
    r.stats.wmc_count_calls = manager->count_calls();
    r.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

ReachResult reach_query(const ProgramIR& ir, std::vector<std::uint8_t> pattern,
                        std::span<const std::pair<Qubit, bool>> target, std::uint64_t max_iterations) {
    RunConfig cfg;
    cfg.mode = Mode::Preset;
    cfg.preset = std::move(pattern);
    cfg.max_iterations = max_iterations;
    RunResult r = run(ir, cfg);
    RootTwoRational p = r.p_global;
    if (!target.empty() && !p.is_zero()) {
        for (const auto& [q, b] : target) {
            if (q >= ir.num_qubits) {
                throw RuntimeError("target qubit " + std::to_string(q) + " out of range");
            }
        }
        p = norm_sq(collapse(r.state, target));
    }
    const bool reachable = r.status != RunStatus::Unreachable && p.sign() > 0;
    return ReachResult{reachable, std::move(p), std::move(r)};
}

SqcResult run_sqc(const ProgramIR& ir, const qasm::Sqc& loop, const SymbolicState& internal0,
                  const SqcConfig& cfg) {
    check_ir(ir);
    const Qubit m = cfg.external;
    if (internal0.first_qubit() != m || internal0.total_qubits() != ir.num_qubits) {
        throw std::invalid_argument("run_sqc: internal state must occupy qubits [external, n)");
    }
    std::mt19937_64 rng(cfg.seed);
    SqcResult res{internal0, RootTwoRational(1), 0, RunStatus::Ok, {}, ClassicalStore(ir)};
    std::size_t body_used = 0;

    while (guard_eval(res.store, loop.guard)) {
        if (res.iterations >= cfg.max_iterations) {
            res.status = RunStatus::MaxIter;
            break;
        }
        const std::uint64_t iter = res.iterations++;
        std::string ext = cfg.inputs ? cfg.inputs(iter) : std::string(m, '0');
        SymbolicState frame = compose(ext, res.internal);
        for (const GateOp& g : cfg.prep) {
            for (Qubit q : g.operands()) {
                if (q >= m) throw std::invalid_argument("run_sqc: prep gates must act on external qubits only");
            }
            frame = apply_gate(frame, g);
        }

        std::vector<std::uint8_t> rest(cfg.body_preset.begin() + static_cast<std::ptrdiff_t>(body_used),
                                       cfg.body_preset.end());
        OutcomeSource source = cfg.body_preset.empty() ? OutcomeSource(Mode::Sample, {}, cfg.seed + iter + 1)
                                                       : OutcomeSource(Mode::Preset, rest, 0);
        Machine body(std::move(frame), res.store, std::move(source), cfg.max_iterations);
        body.skip_below = m;
        body.p_global_ = res.p_global;
        const bool alive = body.exec(loop.body);
        body_used += body.events_.size();
        res.p_global = body.p_global_;
        res.store = body.store_;
        if (!alive) {
            res.internal = retain(body.state_, std::vector<std::uint8_t>(m, 0));
            res.status = body.status_;
            break;
        }
        if (cfg.after_body) cfg.after_body(iter, body.state_);

        // External register: chained get_prob + mid_measure, then retention.
        std::vector<std::uint8_t> outcomes;
        for (Qubit q = 0; q < m; ++q) {
            auto [p0, p1] = get_prob(body.state_, q);
            std::uint8_t b;
            if (!cfg.preset.empty()) {
                if (iter >= cfg.preset.size() || cfg.preset[iter].size() != m) {
                    throw RuntimeError("run_sqc: no preset outcome vector for iteration " + std::to_string(iter + 1));
                }
                b = cfg.preset[iter][q];
            } else {
                const double threshold = (p1 / (p0 + p1)).to_double();
                b = static_cast<double>(rng() >> 11) * 0x1.0p-53 < threshold ? 1 : 0;
            }
            const RootTwoRational joint = b ? p1 : p0;
            body.state_ = mid_measure(body.state_, q, b != 0);
            outcomes.push_back(b);
            if (joint.is_zero()) {
                res.p_global = 0;
                res.status = RunStatus::Unreachable;
                break;
            }
            res.p_global *= joint / (p0 + p1);
        }
        for (const auto& [q, bit] : body.skipped) {
            if (q < outcomes.size()) res.store.set(bit, outcomes[q]);
        }
        outcomes.resize(m, 0);
        res.outcomes.push_back(outcomes);
        res.internal = retain(body.state_, outcomes);
        if (res.status == RunStatus::Unreachable) break;
    }
    return res;
}

}  // namespace qseq

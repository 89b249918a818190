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

#include "qseq/symbolic_state.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qseq {

using bdd::Bdd;
using bdd::Var;

namespace {

// ---------------------------------------------------------------------------
// Bit-sliced two's-complement arithmetic. A Slices value is a vector of bit
// planes, least significant first, whose top plane is the sign.

Slices sign_extend(Slices x, std::size_t width) {
    while (x.size() < width) {
        x.push_back(x.back());
    }
    return x;
}

/// x + y + carry_in over equal widths, modulo 2^width.
Slices add(const Slices& x, const Slices& y, Bdd carry) {
    Slices sum(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        Bdd half = x[i] ^ y[i];
        sum[i] = half ^ carry;
        if (i + 1 < x.size()) {
            carry = (x[i] & y[i]) | (carry & half);
        }
    }
    return sum;
}

/// ite(guard, -x, x), one slice wider than x.
Slices cond_negate(const Slices& x, const Bdd& guard) {
    if (guard.is_false()) {
        return sign_extend(x, x.size() + 1);
    }
    Slices ext = sign_extend(x, x.size() + 1);
    Bdd carry = guard;
    for (std::size_t i = 0; i < ext.size(); ++i) {
        Bdd inverted = ext[i] ^ guard;
        ext[i] = inverted ^ carry;
        carry = inverted & carry;
    }
    return ext;
}

Slices select(const Bdd& guard, const Slices& then_value, const Slices& else_value) {
    std::size_t width = std::max(then_value.size(), else_value.size());
    Slices t = sign_extend(then_value, width);
    Slices e = sign_extend(else_value, width);
    Slices out(width);
    bdd::Manager& m = *guard.manager();
    for (std::size_t i = 0; i < width; ++i) {
        out[i] = m.ite(guard, t[i], e[i]);
    }
    return out;
}

/// Pads every component to a common width.
std::array<Slices, 4> align(std::array<Slices, 4> comps) {
    std::size_t width = 2;
    for (const Slices& c : comps) {
        width = std::max(width, c.size());
    }
    for (Slices& c : comps) {
        c = sign_extend(std::move(c), width);
    }
    return comps;
}

Bdd conjunction(bdd::Manager& m, const std::vector<Qubit>& qubits) {
    Bdd g = m.bdd_true();
    for (Qubit q : qubits) {
        g &= m.variable(q);
    }
    return g;
}

template <typename F>
std::array<Slices, 4> map_slices(const SymbolicState& s, F&& f) {
    std::array<Slices, 4> out;
    for (int u = 0; u < 4; ++u) {
        out[u].reserve(s.width());
        for (const Bdd& b : s.component(u)) {
            out[u].push_back(f(b));
        }
    }
    return out;
}

SymbolicState with_components(const SymbolicState& s, unsigned k, std::array<Slices, 4> comps) {
    return reduce(SymbolicState(s.manager_ptr(), s.first_qubit(), k, align(std::move(comps))));
}

/// Rotation of (a, b, c, d) by a power of w (or of i) restricted to the
/// guard; source[u] names the old component feeding new component u and
/// negate[u] whether it flips sign.
struct PhaseRule {
    std::array<int, 4> source;
    std::array<bool, 4> negate;
};

// w^e * (a w^3 + b w^2 + c w + d), read off from the single step
// (a, b, c, d) -> (b, c, d, -a).
constexpr PhaseRule kTimesOmega{{kCompB, kCompC, kCompD, kCompA}, {false, false, false, true}};
constexpr PhaseRule kTimesI{{kCompC, kCompD, kCompA, kCompB}, {false, false, true, true}};
constexpr PhaseRule kTimesMinusI{{kCompC, kCompD, kCompA, kCompB}, {true, true, false, false}};
constexpr PhaseRule kTimesOmegaInv{{kCompD, kCompA, kCompB, kCompC}, {true, false, false, false}};

std::array<Slices, 4> rotate(const std::array<Slices, 4>& comps, const PhaseRule& rule, const Bdd& guard) {
    std::array<Slices, 4> out;
    for (int u = 0; u < 4; ++u) {
        const Slices& src = comps[rule.source[u]];
        out[u] = rule.negate[u] ? cond_negate(src, guard) : src;
    }
    return out;
}

std::array<Slices, 4> components_of(const SymbolicState& s) {
    return {s.component(0), s.component(1), s.component(2), s.component(3)};
}

void check_qubit(const SymbolicState& s, Qubit t, const char* what) {
    if (t < s.first_qubit() || t >= s.total_qubits()) {
        throw std::out_of_range(std::string(what) + ": qubit " + std::to_string(t) +
                                " is outside the state's register");
    }
}

// ---------------------------------------------------------------------------
// Weighted model counting.

struct WeightedSums {
    BigInt rational;  // sum of a^2 + b^2 + c^2 + d^2 over the counted indices
    BigInt root;      // sum of ab + bc + cd - da
};

BigInt slice_weight(std::size_t i, std::size_t width) {
    BigInt w = BigInt(1) << i;
    return i + 1 == width ? BigInt(-w) : w;
}

/// Sums over all indices (and, when `literal` is set, over the indices
/// satisfying it) of the pairwise component products, counted by
/// sat_count of slice conjunctions.
std::pair<WeightedSums, WeightedSums> weighted_sums(const SymbolicState& s, const Bdd* literal) {
    bdd::Manager& m = s.manager();
    const std::size_t r = s.width();
    std::pair<WeightedSums, WeightedSums> acc;  // (all, literal-restricted)

    auto pair_sum = [&](int u, int v, BigInt& all, BigInt& lit) {
        const Slices& fu = s.component(u);
        const Slices& fv = s.component(v);
        for (std::size_t i = 0; i < r; ++i) {
            if (fu[i].is_false()) {
                continue;
            }
            std::size_t j0 = u == v ? i : 0;
            for (std::size_t j = j0; j < r; ++j) {
                Bdd both = fu[i] & fv[j];
                if (both.is_false()) {
                    continue;
                }
                BigInt w = slice_weight(i, r) * slice_weight(j, r);
                if (u == v && i != j) {
                    w *= 2;
                }
                all += w * m.sat_count_all(both);
                if (literal != nullptr) {
                    lit += w * m.sat_count_all(both & *literal);
                }
            }
        }
    };

    for (int u = 0; u < 4; ++u) {
        pair_sum(u, u, acc.first.rational, acc.second.rational);
    }
    BigInt all_da;
    BigInt lit_da;
    pair_sum(kCompA, kCompB, acc.first.root, acc.second.root);
    pair_sum(kCompB, kCompC, acc.first.root, acc.second.root);
    pair_sum(kCompC, kCompD, acc.first.root, acc.second.root);
    pair_sum(kCompD, kCompA, all_da, lit_da);
    acc.first.root -= all_da;
    acc.second.root -= lit_da;
    return acc;
}

RootTwoRational to_probability(const WeightedSums& sums, const SymbolicState& s) {
    // Counts run over every manager variable; variables outside the register
    // are free and multiply each count by 2^first.
    Rational scale = pow2(-static_cast<int>(s.k()) - static_cast<int>(s.first_qubit()));
    return {Rational(sums.rational) * scale, Rational(sums.root) * scale};
}

}  // namespace

// ---------------------------------------------------------------------------

SymbolicState::SymbolicState(std::shared_ptr<bdd::Manager> manager, Qubit first_qubit, unsigned k,
                             std::array<Slices, 4> components)
    : manager_(std::move(manager)), first_(first_qubit), k_(k), components_(std::move(components)) {
    if (!manager_) {
        throw std::invalid_argument("SymbolicState: null manager");
    }
    if (first_ > manager_->variable_count()) {
        throw std::invalid_argument("SymbolicState: register start beyond the manager's variables");
    }
    std::size_t width = components_[0].size();
    for (const Slices& c : components_) {
        if (c.size() != width || width < 2) {
            throw std::invalid_argument("SymbolicState: components need a common width >= 2");
        }
    }
}

std::size_t SymbolicState::node_count() const {
    std::vector<Bdd> roots;
    for (const Slices& c : components_) {
        roots.insert(roots.end(), c.begin(), c.end());
    }
    return manager_->dag_size(roots);
}

bool operator==(const SymbolicState& a, const SymbolicState& b) {
    return a.manager_ == b.manager_ && a.first_ == b.first_ && a.k_ == b.k_ &&
           a.components_ == b.components_;
}

SymbolicState init_basis(std::shared_ptr<bdd::Manager> manager, std::string_view bits, Qubit first_qubit,
                         unsigned width) {
    if (first_qubit + bits.size() != manager->variable_count()) {
        throw std::invalid_argument("init_basis: expected " +
                                    std::to_string(manager->variable_count() - first_qubit) +
                                    " bits, got " + std::to_string(bits.size()));
    }
    if (width < 2) {
        throw std::invalid_argument("init_basis: width must be at least 2");
    }
    std::vector<std::pair<Var, bool>> literals;
    for (std::size_t j = 0; j < bits.size(); ++j) {
        if (bits[j] != '0' && bits[j] != '1') {
            throw std::invalid_argument("init_basis: bits must be '0' or '1'");
        }
        literals.emplace_back(first_qubit + static_cast<Var>(j), bits[j] == '1');
    }
    Bdd minterm = manager->cube(literals);
    std::array<Slices, 4> comps;
    for (Slices& c : comps) {
        c.assign(width, manager->bdd_false());
    }
    comps[kCompD][0] = minterm;
    return SymbolicState(std::move(manager), first_qubit, 0, std::move(comps));
}

SymbolicState init_basis(Qubit n, std::string_view bits) {
    if (n < 1) {
        throw std::invalid_argument("init_basis: need at least one qubit");
    }
    return init_basis(std::make_shared<bdd::Manager>(n), bits);
}

SymbolicState apply_gate(const SymbolicState& s, const GateOp& g) {
    g.validate(s.total_qubits());
    for (Qubit q : g.operands()) {
        check_qubit(s, q, "apply_gate");
    }
    bdd::Manager& m = s.manager();
    const Qubit t = g.targets.front();

    switch (g.kind) {
        case GateKind::X:
        case GateKind::CX:
        case GateKind::CCX:
        case GateKind::MCX: {
            std::pair<Var, Bdd> rule{t, m.variable(t) ^ conjunction(m, g.controls)};
            bdd::Substitution sub(m, std::span(&rule, 1));
            return SymbolicState(s.manager_ptr(), s.first_qubit(), s.k(), map_slices(s, sub));
        }
        case GateKind::Swap: {
            Qubit other = g.targets[1];
            std::array<std::pair<Var, Bdd>, 2> rules{{{t, m.variable(other)}, {other, m.variable(t)}}};
            bdd::Substitution sub(m, rules);
            return SymbolicState(s.manager_ptr(), s.first_qubit(), s.k(), map_slices(s, sub));
        }
        case GateKind::Z:
        case GateKind::CZ:
        case GateKind::MCZ: {
            Bdd guard = conjunction(m, g.operands());
            std::array<Slices, 4> comps;
            for (int u = 0; u < 4; ++u) {
                comps[u] = cond_negate(s.component(u), guard);
            }
            return with_components(s, s.k(), std::move(comps));
        }
        case GateKind::S:
        case GateKind::Sdg:
        case GateKind::T:
        case GateKind::Tdg: {
            const PhaseRule& rule = g.kind == GateKind::S     ? kTimesI
                                    : g.kind == GateKind::Sdg ? kTimesMinusI
                                    : g.kind == GateKind::T   ? kTimesOmega
                                                              : kTimesOmegaInv;
            Bdd guard = m.variable(t);
            auto old = components_of(s);
            auto rotated = rotate(old, rule, guard);
            std::array<Slices, 4> comps;
            for (int u = 0; u < 4; ++u) {
                comps[u] = select(guard, rotated[u], old[u]);
            }
            return with_components(s, s.k(), std::move(comps));
        }
        case GateKind::Y: {
            // Y|0> = i|1>, Y|1> = -i|0>.
            auto low = map_slices(s, [&](const Bdd& f) { return m.cofactor(f, t, false); });
            auto high = map_slices(s, [&](const Bdd& f) { return m.cofactor(f, t, true); });
            auto on_one = rotate(low, kTimesI, m.bdd_true());
            auto on_zero = rotate(high, kTimesMinusI, m.bdd_true());
            Bdd guard = m.variable(t);
            std::array<Slices, 4> comps;
            for (int u = 0; u < 4; ++u) {
                comps[u] = select(guard, on_one[u], on_zero[u]);
            }
            return with_components(s, s.k(), std::move(comps));
        }
        case GateKind::H: {
            // new = ite(q_t, x - y, x + y) = x + (y xor q_t) + q_t.
            Bdd guard = m.variable(t);
            std::array<Slices, 4> comps;
            for (int u = 0; u < 4; ++u) {
                Slices x;
                Slices y;
                for (const Bdd& f : s.component(u)) {
                    x.push_back(m.cofactor(f, t, false));
                    y.push_back(m.cofactor(f, t, true) ^ guard);
                }
                x = sign_extend(std::move(x), s.width() + 1);
                // Sign-extending y after the xor equals xor-ing the extended y.
                y = sign_extend(std::move(y), s.width() + 1);
                comps[u] = add(x, y, guard);
            }
            return with_components(s, s.k() + 1, std::move(comps));
        }
    }
    throw std::logic_error("apply_gate: unhandled gate kind");
}

SymbolicState mid_measure(const SymbolicState& s, Qubit t, bool outcome) {
    check_qubit(s, t, "mid_measure");
    bdd::Manager& m = s.manager();
    Bdd lit = m.literal(t, outcome);
    auto comps = map_slices(s, [&](const Bdd& f) { return lit & m.cofactor(f, t, outcome); });
    return reduce(SymbolicState(s.manager_ptr(), s.first_qubit(), s.k(), std::move(comps)));
}

SymbolicState collapse(const SymbolicState& s, std::span<const std::pair<Qubit, bool>> outcomes) {
    bdd::Manager& m = s.manager();
    std::vector<std::pair<Var, bool>> lits;
    for (const auto& [q, b] : outcomes) {
        check_qubit(s, q, "collapse");
        lits.emplace_back(q, b);
    }
    Bdd cube = m.cube(lits);
    if (cube.is_false()) {
        throw std::invalid_argument("collapse: contradictory outcomes");
    }
    auto comps = map_slices(s, [&](const Bdd& f) { return cube & m.cofactor(f, lits); });
    return reduce(SymbolicState(s.manager_ptr(), s.first_qubit(), s.k(), std::move(comps)));
}

std::pair<RootTwoRational, RootTwoRational> get_prob(const SymbolicState& s, Qubit t) {
    check_qubit(s, t, "get_prob");
    Bdd lit = s.manager().variable(t);
    auto [all, ones] = weighted_sums(s, &lit);
    RootTwoRational p1 = to_probability(ones, s);
    RootTwoRational total = to_probability(all, s);
    return {total - p1, p1};
}

RootTwoRational norm_sq(const SymbolicState& s) { return to_probability(weighted_sums(s, nullptr).first, s); }

SymbolicState reduce(SymbolicState s) {
    std::array<Slices, 4> comps = components_of(s);
    unsigned k = s.k();
    auto drop_redundant_sign = [&] {
        while (comps[0].size() > 2) {
            std::size_t r = comps[0].size();
            bool redundant = std::all_of(comps.begin(), comps.end(),
                                         [&](const Slices& c) { return c[r - 1] == c[r - 2]; });
            if (!redundant) {
                break;
            }
            for (Slices& c : comps) {
                c.pop_back();
            }
        }
    };
    drop_redundant_sign();
    while (k >= 2 && std::all_of(comps.begin(), comps.end(), [](const Slices& c) { return c[0].is_false(); })) {
        for (Slices& c : comps) {
            c.erase(c.begin());
            c.push_back(c.back());
        }
        k -= 2;
        drop_redundant_sign();
    }
    if (k == s.k() && comps[0].size() == s.width()) {
        return s;
    }
    return SymbolicState(s.manager_ptr(), s.first_qubit(), k, std::move(comps));
}

Amplitudes extract_amplitudes(const SymbolicState& s, Qubit limit) {
    const Qubit n = s.qubit_count();
    if (n > limit || n > 63) {
        throw std::length_error("extract_amplitudes: " + std::to_string(n) + " qubits exceeds the limit of " +
                                std::to_string(limit));
    }
    bdd::Manager& m = s.manager();
    Bdd nonzero = m.bdd_false();
    for (int u = 0; u < 4; ++u) {
        for (const Bdd& f : s.component(u)) {
            nonzero |= f;
        }
    }
    const Qubit first = s.first_qubit();
    const std::size_t r = s.width();
    Amplitudes out{n, s.k(), {}};
    std::vector<bool> assignment(s.total_qubits(), false);

    auto emit = [&](std::uint64_t index) {
        for (Qubit j = 0; j < n; ++j) {
            assignment[first + j] = (index >> (n - 1 - j)) & 1u;
        }
        std::array<BigInt, 4> value;
        for (int u = 0; u < 4; ++u) {
            for (std::size_t i = 0; i < r; ++i) {
                if (m.evaluate(s.slice(u, static_cast<unsigned>(i)), assignment)) {
                    value[u] += slice_weight(i, r);
                }
            }
        }
        out.entries.emplace_back(index, OmegaInt(value[0], value[1], value[2], value[3]));
    };

    m.for_each_path(nonzero, [&](std::span<const std::int8_t> path) {
        std::uint64_t base = 0;
        std::vector<Qubit> free;
        for (Qubit j = 0; j < n; ++j) {
            std::int8_t bit = path[first + j];
            if (bit < 0) {
                free.push_back(j);
            } else if (bit == 1) {
                base |= std::uint64_t{1} << (n - 1 - j);
            }
        }
        for (std::uint64_t combo = 0; combo < (std::uint64_t{1} << free.size()); ++combo) {
            std::uint64_t index = base;
            for (std::size_t f = 0; f < free.size(); ++f) {
                if ((combo >> f) & 1u) {
                    index |= std::uint64_t{1} << (n - 1 - free[f]);
                }
            }
            emit(index);
        }
    });
    std::sort(out.entries.begin(), out.entries.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    return out;
}

SymbolicState compose(std::string_view ext_bits, const SymbolicState& s_in) {
    const auto m = static_cast<Qubit>(ext_bits.size());
    if (m > s_in.first_qubit()) {
        throw std::invalid_argument("compose: no room for a " + std::to_string(m) +
                                    "-qubit external register before the internal one");
    }
    const Qubit first = s_in.first_qubit() - m;
    bdd::Manager& mgr = s_in.manager();
    std::vector<std::pair<Var, bool>> literals;
    for (Qubit j = 0; j < m; ++j) {
        if (ext_bits[j] != '0' && ext_bits[j] != '1') {
            throw std::invalid_argument("compose: bits must be '0' or '1'");
        }
        literals.emplace_back(first + j, ext_bits[j] == '1');
    }
    for (int u = 0; u < 4; ++u) {
        for (const Bdd& f : s_in.component(u)) {
            if (auto top = mgr.support(f); !top.empty() && top.front() < s_in.first_qubit()) {
                throw std::invalid_argument("compose: internal state depends on external qubit q" +
                                            std::to_string(top.front()));
            }
        }
    }
    Bdd ext = mgr.cube(literals);
    auto comps = map_slices(s_in, [&](const Bdd& f) { return ext & f; });
    return SymbolicState(s_in.manager_ptr(), first, s_in.k(), std::move(comps));
}

SymbolicState retain(const SymbolicState& s, std::span<const std::uint8_t> outcomes) {
    const auto m = static_cast<Qubit>(outcomes.size());
    if (m > s.qubit_count()) {
        throw std::invalid_argument("retain: more outcomes than qubits");
    }
    std::vector<std::pair<Var, bool>> assignment;
    for (Qubit j = 0; j < m; ++j) {
        assignment.emplace_back(s.first_qubit() + j, outcomes[j] != 0);
    }
    bdd::Manager& mgr = s.manager();
    auto comps = map_slices(s, [&](const Bdd& f) { return mgr.cofactor(f, assignment); });
    return reduce(SymbolicState(s.manager_ptr(), s.first_qubit() + m, s.k(), std::move(comps)));
}

}  // namespace qseq

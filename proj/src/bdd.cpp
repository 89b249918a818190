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

#include "qseq/bdd.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace qseq::bdd {

namespace {

constexpr Var kTerminalVar = std::numeric_limits<Var>::max();
constexpr std::size_t kInitialUnique = 1u << 12;
constexpr std::size_t kInitialCache = 1u << 16;
constexpr std::size_t kMaxCache = 1u << 21;

inline std::uint64_t mix(std::uint64_t x) {
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    x *= 0xc4ceb9fe1a85ec53ULL;
    x ^= x >> 33;
    return x;
}

inline std::uint64_t hash3(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    return mix(a * 0x9e3779b97f4a7c15ULL ^ mix(b + 0x632be59bd9b4e019ULL) ^ (c << 29) ^ (c >> 35));
}

}  // namespace

Bdd Bdd::operator&(const Bdd& o) const { return manager_->apply(BinaryOp::And, *this, o); }
Bdd Bdd::operator|(const Bdd& o) const { return manager_->apply(BinaryOp::Or, *this, o); }
Bdd Bdd::operator^(const Bdd& o) const { return manager_->apply(BinaryOp::Xor, *this, o); }
Bdd Bdd::operator~() const { return manager_->negate(*this); }

Manager::Manager(Var variable_count)
    : variable_count_(variable_count), unique_(kInitialUnique, 0), cache_(kInitialCache) {
    nodes_.push_back({kTerminalVar, kFalseId, kFalseId});
    nodes_.push_back({kTerminalVar, kTrueId, kTrueId});
}

void Manager::check_owner(const Bdd& f) const {
    if (f.manager() != this) {
        throw std::invalid_argument("bdd: operand belongs to a different manager");
    }
}

NodeId Manager::make(Var var, NodeId low, NodeId high) {
    if (low == high) {
        return low;
    }
    std::size_t mask = unique_.size() - 1;
    std::size_t slot = hash3(var, low, high) & mask;
    while (NodeId id = unique_[slot]) {
        const Node& n = nodes_[id];
        if (n.var == var && n.low == low && n.high == high) {
            return id;
        }
        slot = (slot + 1) & mask;
    }
    if (nodes_.size() >= std::numeric_limits<NodeId>::max()) {
        throw std::length_error("bdd: node table exhausted");
    }
    auto id = static_cast<NodeId>(nodes_.size());
    nodes_.push_back({var, low, high});
    unique_[slot] = id;
    if (++unique_used_ * 2 > unique_.size()) {
        grow_unique_table();
        maybe_grow_cache();
    }
    return id;
}

void Manager::grow_unique_table() {
    std::vector<NodeId> bigger(unique_.size() * 2, 0);
    std::size_t mask = bigger.size() - 1;
    for (NodeId id : unique_) {
        if (id == 0) {
            continue;
        }
        const Node& n = nodes_[id];
        std::size_t slot = hash3(n.var, n.low, n.high) & mask;
        while (bigger[slot] != 0) {
            slot = (slot + 1) & mask;
        }
        bigger[slot] = id;
    }
    unique_.swap(bigger);
}

void Manager::maybe_grow_cache() {
    if (cache_.size() < kMaxCache && nodes_.size() > cache_.size()) {
        // Dropping entries is safe: the cache is a pure memo.
        cache_.assign(std::min(kMaxCache, cache_.size() * 4), CacheEntry{});
    }
}

Manager::CacheEntry& Manager::cache_slot(Op op, NodeId a, NodeId b, NodeId c) {
    std::uint64_t h = hash3((static_cast<std::uint64_t>(op) << 32) | a, b, c);
    return cache_[h & (cache_.size() - 1)];
}

bool Manager::cache_lookup(Op op, NodeId a, NodeId b, NodeId c, NodeId& result) {
    const CacheEntry& e = cache_slot(op, a, b, c);
    if (e.op == op && e.a == a && e.b == b && e.c == c) {
        result = e.result;
        return true;
    }
    return false;
}

void Manager::cache_store(Op op, NodeId a, NodeId b, NodeId c, NodeId result) {
    cache_slot(op, a, b, c) = CacheEntry{op, a, b, c, result};
}

Bdd Manager::variable(Var v) { return literal(v, true); }

Bdd Manager::literal(Var v, bool positive) {
    if (v >= variable_count_) {
        throw std::out_of_range("bdd: variable index " + std::to_string(v) + " out of range");
    }
    return {this, positive ? make(v, kFalseId, kTrueId) : make(v, kTrueId, kFalseId)};
}

Bdd Manager::cube(std::span<const std::pair<Var, bool>> literals) {
    std::vector<std::pair<Var, bool>> sorted(literals.begin(), literals.end());
    std::sort(sorted.begin(), sorted.end(), [](auto& x, auto& y) { return x.first > y.first; });
    NodeId acc = kTrueId;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        auto [v, positive] = sorted[i];
        if (v >= variable_count_) {
            throw std::out_of_range("bdd: variable index out of range in cube");
        }
        if (i > 0 && sorted[i - 1].first == v) {
            if (sorted[i - 1].second != positive) {
                return bdd_false();
            }
            continue;
        }
        acc = positive ? make(v, kFalseId, acc) : make(v, acc, kFalseId);
    }
    return {this, acc};
}

Bdd Manager::apply(BinaryOp op, const Bdd& f, const Bdd& g) {
    check_owner(f);
    check_owner(g);
    Op internal = op == BinaryOp::And ? Op::And : op == BinaryOp::Or ? Op::Or : Op::Xor;
    return {this, apply_rec(internal, f.id(), g.id())};
}

NodeId Manager::apply_rec(Op op, NodeId f, NodeId g) {
    switch (op) {
        case Op::And:
            if (f == kFalseId || g == kFalseId) return kFalseId;
            if (f == kTrueId) return g;
            if (g == kTrueId || f == g) return f;
            break;
        case Op::Or:
            if (f == kTrueId || g == kTrueId) return kTrueId;
            if (f == kFalseId) return g;
            if (g == kFalseId || f == g) return f;
            break;
        case Op::Xor:
            if (f == kFalseId) return g;
            if (g == kFalseId) return f;
            if (f == g) return kFalseId;
            if (f == kTrueId) return not_rec(g);
            if (g == kTrueId) return not_rec(f);
            break;
        default:
            break;
    }
    if (f > g) {
        std::swap(f, g);
    }
    NodeId result;
    if (cache_lookup(op, f, g, 0, result)) {
        return result;
    }
    Var vf = nodes_[f].var;
    Var vg = nodes_[g].var;
    Var v = std::min(vf, vg);
    NodeId f0 = vf == v ? nodes_[f].low : f;
    NodeId f1 = vf == v ? nodes_[f].high : f;
    NodeId g0 = vg == v ? nodes_[g].low : g;
    NodeId g1 = vg == v ? nodes_[g].high : g;
    NodeId low = apply_rec(op, f0, g0);
    NodeId high = apply_rec(op, f1, g1);
    result = make(v, low, high);
    cache_store(op, f, g, 0, result);
    return result;
}

Bdd Manager::negate(const Bdd& f) {
    check_owner(f);
    return {this, not_rec(f.id())};
}

NodeId Manager::not_rec(NodeId f) {
    if (f <= kTrueId) {
        return f ^ 1u;
    }
    NodeId result;
    if (cache_lookup(Op::Not, f, 0, 0, result)) {
        return result;
    }
    NodeId low = not_rec(nodes_[f].low);
    NodeId high = not_rec(nodes_[f].high);
    result = make(nodes_[f].var, low, high);
    cache_store(Op::Not, f, 0, 0, result);
    return result;
}

Bdd Manager::ite(const Bdd& f, const Bdd& g, const Bdd& h) {
    check_owner(f);
    check_owner(g);
    check_owner(h);
    return {this, ite_rec(f.id(), g.id(), h.id())};
}

NodeId Manager::ite_rec(NodeId f, NodeId g, NodeId h) {
    if (f == kTrueId) return g;
    if (f == kFalseId) return h;
    if (g == h) return g;
    if (g == kTrueId && h == kFalseId) return f;
    if (g == kFalseId && h == kTrueId) return not_rec(f);
    if (g == kTrueId) return apply_rec(Op::Or, f, h);
    if (h == kFalseId) return apply_rec(Op::And, f, g);
    if (f == g) return apply_rec(Op::Or, f, h);
    if (f == h) return apply_rec(Op::And, f, g);
    NodeId result;
    if (cache_lookup(Op::Ite, f, g, h, result)) {
        return result;
    }
    Var v = std::min({nodes_[f].var, nodes_[g].var, nodes_[h].var});
    auto split = [&](NodeId x, bool high) {
        if (nodes_[x].var != v) return x;
        return high ? nodes_[x].high : nodes_[x].low;
    };
    NodeId low = ite_rec(split(f, false), split(g, false), split(h, false));
    NodeId high = ite_rec(split(f, true), split(g, true), split(h, true));
    result = make(v, low, high);
    cache_store(Op::Ite, f, g, h, result);
    return result;
}

Bdd Manager::cofactor(const Bdd& f, Var v, bool value) {
    check_owner(f);
    if (v >= variable_count_) {
        throw std::out_of_range("bdd: cofactor variable out of range");
    }
    return {this, cofactor_rec(f.id(), v, value)};
}

NodeId Manager::cofactor_rec(NodeId f, Var v, bool value) {
    Var vf = nodes_[f].var;
    if (vf > v) {
        return f;  // constants included: their var is maximal
    }
    if (vf == v) {
        return value ? nodes_[f].high : nodes_[f].low;
    }
    Op op = value ? Op::Cofactor1 : Op::Cofactor0;
    NodeId result;
    if (cache_lookup(op, f, v, 0, result)) {
        return result;
    }
    NodeId low = cofactor_rec(nodes_[f].low, v, value);
    NodeId high = cofactor_rec(nodes_[f].high, v, value);
    result = make(vf, low, high);
    cache_store(op, f, v, 0, result);
    return result;
}

Bdd Manager::cofactor(const Bdd& f, std::span<const std::pair<Var, bool>> assignment) {
    check_owner(f);
    Bdd c = cube(assignment);
    if (c.is_false()) {
        throw std::invalid_argument("bdd: contradictory cofactor assignment");
    }
    return {this, restrict_rec(f.id(), c.id())};
}

NodeId Manager::restrict_rec(NodeId f, NodeId cube) {
    while (true) {
        if (f <= kTrueId || cube == kTrueId) {
            return f;
        }
        Var vf = nodes_[f].var;
        Var vc = nodes_[cube].var;
        bool positive = nodes_[cube].low == kFalseId;
        NodeId next = positive ? nodes_[cube].high : nodes_[cube].low;
        if (vc < vf) {
            cube = next;
            continue;
        }
        if (vc == vf) {
            f = positive ? nodes_[f].high : nodes_[f].low;
            cube = next;
            continue;
        }
        break;
    }
    NodeId result;
    if (cache_lookup(Op::Restrict, f, cube, 0, result)) {
        return result;
    }
    NodeId low = restrict_rec(nodes_[f].low, cube);
    NodeId high = restrict_rec(nodes_[f].high, cube);
    result = make(nodes_[f].var, low, high);
    cache_store(Op::Restrict, f, cube, 0, result);
    return result;
}

Bdd Manager::substitute(const Bdd& f, std::span<const std::pair<Var, Bdd>> replacements) {
    check_owner(f);
    Substitution sub(*this, replacements);
    return sub(f);
}

const BigInt& Manager::count_rec(NodeId f) {
    auto it = counts_.find(f);
    if (it != counts_.end()) {
        return it->second;
    }
    if (f <= kTrueId) {
        return counts_.emplace(f, BigInt(f == kTrueId ? 1 : 0)).first->second;
    }
    const Node n = nodes_[f];
    auto level = [&](NodeId x) { return x <= kTrueId ? variable_count_ : nodes_[x].var; };
    BigInt low = count_rec(n.low) << (level(n.low) - n.var - 1);
    BigInt high = count_rec(n.high) << (level(n.high) - n.var - 1);
    return counts_.emplace(f, low + high).first->second;
}

BigInt Manager::sat_count_all(const Bdd& f) {
    check_owner(f);
    ++count_calls_;
    Var level = f.is_constant() ? variable_count_ : nodes_[f.id()].var;
    return count_rec(f.id()) << level;
}

BigInt Manager::sat_count(const Bdd& f, Var universe) {
    check_owner(f);
    if (universe > variable_count_) {
        throw std::invalid_argument("bdd: universe larger than the manager's variable count");
    }
    if (auto top = max_support_var(f); top && *top >= universe) {
        throw std::invalid_argument("bdd: support exceeds the counting universe");
    }
    return sat_count_all(f) >> (variable_count_ - universe);
}

bool Manager::evaluate(const Bdd& f, const std::vector<bool>& assignment) const {
    check_owner(f);
    NodeId id = f.id();
    while (id > kTrueId) {
        const Node& n = nodes_[id];
        if (n.var >= assignment.size()) {
            throw std::invalid_argument("bdd: assignment too short");
        }
        id = assignment[n.var] ? n.high : n.low;
    }
    return id == kTrueId;
}

std::vector<Var> Manager::support(const Bdd& f) const {
    check_owner(f);
    std::vector<bool> present(variable_count_, false);
    std::unordered_set<NodeId> seen;
    std::vector<NodeId> stack{f.id()};
    while (!stack.empty()) {
        NodeId id = stack.back();
        stack.pop_back();
        if (id <= kTrueId || !seen.insert(id).second) {
            continue;
        }
        present[nodes_[id].var] = true;
        stack.push_back(nodes_[id].low);
        stack.push_back(nodes_[id].high);
    }
    std::vector<Var> vars;
    for (Var v = 0; v < variable_count_; ++v) {
        if (present[v]) {
            vars.push_back(v);
        }
    }
    return vars;
}

std::optional<Var> Manager::max_support_var(const Bdd& f) const {
    std::vector<Var> vars = support(f);
    if (vars.empty()) {
        return std::nullopt;
    }
    return vars.back();
}

void Manager::for_each_path(const Bdd& f,
                            const std::function<void(std::span<const std::int8_t>)>& visit) const {
    check_owner(f);
    std::vector<std::int8_t> assignment(variable_count_, -1);
    std::function<void(NodeId)> walk = [&](NodeId id) {
        if (id == kFalseId) {
            return;
        }
        if (id == kTrueId) {
            visit(assignment);
            return;
        }
        const Node n = nodes_[id];
        assignment[n.var] = 0;
        walk(n.low);
        assignment[n.var] = 1;
        walk(n.high);
        assignment[n.var] = -1;
    };
    walk(f.id());
}

std::size_t Manager::dag_size(std::span<const Bdd> roots) const {
    std::unordered_set<NodeId> seen;
    std::vector<NodeId> stack;
    for (const Bdd& r : roots) {
        check_owner(r);
        stack.push_back(r.id());
    }
    while (!stack.empty()) {
        NodeId id = stack.back();
        stack.pop_back();
        if (id <= kTrueId || !seen.insert(id).second) {
            continue;
        }
        stack.push_back(nodes_[id].low);
        stack.push_back(nodes_[id].high);
    }
    return seen.size();
}

std::string Manager::to_dot(const Bdd& f) const {
    check_owner(f);
    std::ostringstream out;
    out << "digraph bdd {\n";
    out << "  n0 [shape=box,label=\"0\"];\n  n1 [shape=box,label=\"1\"];\n";
    std::unordered_set<NodeId> seen;
    std::vector<NodeId> stack{f.id()};
    while (!stack.empty()) {
        NodeId id = stack.back();
        stack.pop_back();
        if (id <= kTrueId || !seen.insert(id).second) {
            continue;
        }
        const Node& n = nodes_[id];
        out << "  n" << id << " [label=\"q" << n.var << "\"];\n";
        out << "  n" << id << " -> n" << n.low << " [style=dashed];\n";
        out << "  n" << id << " -> n" << n.high << ";\n";
        stack.push_back(n.low);
        stack.push_back(n.high);
    }
    out << "}\n";
    return out.str();
}

Substitution::Substitution(Manager& manager, std::span<const std::pair<Var, Bdd>> replacements)
    : manager_(manager), replacement_(manager.variable_count()) {
    for (const auto& [v, g] : replacements) {
        if (v >= manager.variable_count()) {
            throw std::out_of_range("bdd: substituted variable out of range");
        }
        manager.check_owner(g);
        replacement_[v] = g.id();
        max_var_ = std::max(max_var_, v);
    }
}

Bdd Substitution::operator()(const Bdd& f) {
    manager_.check_owner(f);
    return {&manager_, rec(f.id())};
}

NodeId Substitution::rec(NodeId f) {
    if (f <= kTrueId || manager_.nodes_[f].var > max_var_) {
        return f;
    }
    if (auto it = memo_.find(f); it != memo_.end()) {
        return it->second;
    }
    const Manager::Node n = manager_.nodes_[f];
    NodeId low = rec(n.low);
    NodeId high = rec(n.high);
    NodeId selector = replacement_[n.var] ? *replacement_[n.var] : manager_.make(n.var, kFalseId, kTrueId);
    NodeId result = manager_.ite_rec(selector, high, low);
    memo_.emplace(f, result);
    return result;
}

}  // namespace qseq::bdd

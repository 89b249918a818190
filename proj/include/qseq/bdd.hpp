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

/// @file bdd.hpp
/// @brief Reduced ordered binary decision diagrams with a static variable order.
///
/// Variables are numbered 0..variable_count-1 and always ordered by index.
/// Nodes are hash-consed, so two handles denote the same function iff they
/// refer to the same node. There are no complement edges and no garbage
/// collection: nodes live as long as their manager.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qseq/scalar.hpp"

namespace qseq::bdd {

using NodeId = std::uint32_t;
using Var = std::uint32_t;

inline constexpr NodeId kFalseId = 0;
inline constexpr NodeId kTrueId = 1;

class Manager;

/// Handle to a node of a specific manager. Cheap to copy.
class Bdd {
  public:
    Bdd() = default;
    Bdd(Manager* manager, NodeId id) : manager_(manager), id_(id) {}

    Manager* manager() const { return manager_; }
    NodeId id() const { return id_; }
    bool valid() const { return manager_ != nullptr; }
    bool is_false() const { return id_ == kFalseId; }
    bool is_true() const { return id_ == kTrueId; }
    bool is_constant() const { return id_ <= kTrueId; }

    Bdd operator&(const Bdd& o) const;
    Bdd operator|(const Bdd& o) const;
    Bdd operator^(const Bdd& o) const;
    Bdd operator~() const;
    Bdd& operator&=(const Bdd& o) { return *this = *this & o; }
    Bdd& operator|=(const Bdd& o) { return *this = *this | o; }
    Bdd& operator^=(const Bdd& o) { return *this = *this ^ o; }

    friend bool operator==(const Bdd& a, const Bdd& b) {
        return a.manager_ == b.manager_ && a.id_ == b.id_;
    }

  private:
    Manager* manager_ = nullptr;
    NodeId id_ = kFalseId;
};

enum class BinaryOp : std::uint8_t { And, Or, Xor };

class Manager {
  public:
    explicit Manager(Var variable_count);
    Manager(const Manager&) = delete;
    Manager& operator=(const Manager&) = delete;

    Var variable_count() const { return variable_count_; }

    Bdd bdd_true() { return {this, kTrueId}; }
    Bdd bdd_false() { return {this, kFalseId}; }
    Bdd constant(bool value) { return value ? bdd_true() : bdd_false(); }

    /// The function "variable v is true". Throws std::out_of_range.
    Bdd variable(Var v);
    /// variable(v) or its negation.
    Bdd literal(Var v, bool positive);
    /// Conjunction of literals, e.g. the minterm of a basis index.
    Bdd cube(std::span<const std::pair<Var, bool>> literals);

    /// Throws std::invalid_argument when the operands belong to other managers.
    Bdd apply(BinaryOp op, const Bdd& f, const Bdd& g);
    Bdd negate(const Bdd& f);
    Bdd ite(const Bdd& f, const Bdd& g, const Bdd& h);

    Bdd cofactor(const Bdd& f, Var v, bool value);
    /// Restriction by a partial assignment; the result no longer depends on
    /// any assigned variable.
    Bdd cofactor(const Bdd& f, std::span<const std::pair<Var, bool>> assignment);

    /// Simultaneous substitution: every replacement reads the original
    /// variables.
    Bdd substitute(const Bdd& f, std::span<const std::pair<Var, Bdd>> replacements);

    /// Number of satisfying assignments over variables 0..universe-1.
    /// Throws std::invalid_argument if f depends on a variable >= universe.
    BigInt sat_count(const Bdd& f, Var universe);
    /// sat_count over all variables of the manager, without the support check.
    BigInt sat_count_all(const Bdd& f);

    bool evaluate(const Bdd& f, const std::vector<bool>& assignment) const;
    std::vector<Var> support(const Bdd& f) const;
    /// Highest variable in the support, or nullopt for constants.
    std::optional<Var> max_support_var(const Bdd& f) const;

    /// Visits every satisfying path as a partial assignment (-1 = don't care).
    void for_each_path(const Bdd& f, const std::function<void(std::span<const std::int8_t>)>& visit) const;

    /// Shared node count of a set of functions, constants excluded.
    std::size_t dag_size(std::span<const Bdd> roots) const;
    /// Total nodes ever created (no reclamation, so this is also the peak).
    std::size_t allocated_nodes() const { return nodes_.size(); }
    std::uint64_t count_calls() const { return count_calls_; }

    std::string to_dot(const Bdd& f) const;

    // Raw node access, used by the algorithms in this file and by tests.
    Var node_var(NodeId id) const { return nodes_[id].var; }
    NodeId node_low(NodeId id) const { return nodes_[id].low; }
    NodeId node_high(NodeId id) const { return nodes_[id].high; }

  private:
    friend class Substitution;

    struct Node {
        Var var;
        NodeId low;
        NodeId high;
    };

    enum class Op : std::uint32_t { Empty = 0, And, Or, Xor, Not, Ite, Cofactor0, Cofactor1, Restrict };

    struct CacheEntry {
        Op op = Op::Empty;
        NodeId a = 0;
        NodeId b = 0;
        NodeId c = 0;
        NodeId result = 0;
    };

    NodeId make(Var var, NodeId low, NodeId high);
    void grow_unique_table();
    void maybe_grow_cache();
    CacheEntry& cache_slot(Op op, NodeId a, NodeId b, NodeId c);
    bool cache_lookup(Op op, NodeId a, NodeId b, NodeId c, NodeId& result);
    void cache_store(Op op, NodeId a, NodeId b, NodeId c, NodeId result);

    NodeId apply_rec(Op op, NodeId f, NodeId g);
    NodeId not_rec(NodeId f);
    NodeId ite_rec(NodeId f, NodeId g, NodeId h);
    NodeId cofactor_rec(NodeId f, Var v, bool value);
    NodeId restrict_rec(NodeId f, NodeId cube);
    const BigInt& count_rec(NodeId f);

    void check_owner(const Bdd& f) const;

    Var variable_count_;
    std::vector<Node> nodes_;
    std::vector<NodeId> unique_;  // open addressing, 0 = empty slot
    std::size_t unique_used_ = 0;
    std::vector<CacheEntry> cache_;
    std::unordered_map<NodeId, BigInt> counts_;
    std::uint64_t count_calls_ = 0;
};

/// A reusable simultaneous substitution whose memo is shared across all the
/// functions it is applied to (e.g. every slice of a quantum state).
class Substitution {
  public:
    Substitution(Manager& manager, std::span<const std::pair<Var, Bdd>> replacements);
    Bdd operator()(const Bdd& f);

  private:
    NodeId rec(NodeId f);

    Manager& manager_;
    std::vector<std::optional<NodeId>> replacement_;
    Var max_var_ = 0;
    std::unordered_map<NodeId, NodeId> memo_;
};

}  // namespace qseq::bdd

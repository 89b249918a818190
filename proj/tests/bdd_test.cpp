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

#include <random>
#include <vector>

#include "gtest/gtest.h"

using namespace qseq;
using namespace qseq::bdd;

namespace {

std::vector<bool> assignment_of(std::uint32_t bits, Var n) {
    std::vector<bool> a(n);
    for (Var v = 0; v < n; ++v) {
        a[v] = (bits >> v) & 1u;
    }
    return a;
}

/// Random function built from literals with random connectives, together with
/// its truth table (bit x of the table = value on assignment x).
struct RandomFunction {
    Bdd f;
    std::vector<bool> table;
};

RandomFunction random_function(Manager& m, std::mt19937_64& rng, Var n, int depth) {
    std::uint32_t size = 1u << n;
    if (depth == 0) {
        Var v = static_cast<Var>(rng() % n);
        bool positive = rng() & 1;
        std::vector<bool> table(size);
        for (std::uint32_t x = 0; x < size; ++x) {
            table[x] = (((x >> v) & 1u) != 0) == positive;
        }
        return {m.literal(v, positive), table};
    }
    RandomFunction l = random_function(m, rng, n, depth - 1);
    RandomFunction r = random_function(m, rng, n, depth - 1);
    BinaryOp op = static_cast<BinaryOp>(rng() % 3);
    std::vector<bool> table(size);
    for (std::uint32_t x = 0; x < size; ++x) {
        bool a = l.table[x];
        bool b = r.table[x];
        table[x] = op == BinaryOp::And ? (a && b) : op == BinaryOp::Or ? (a || b) : (a != b);
    }
    return {m.apply(op, l.f, r.f), table};
}

}  // namespace

TEST(Bdd, variable_examples) {
    Manager m(3);
    Bdd q0 = m.variable(0);
    EXPECT_TRUE(m.evaluate(q0, std::vector<bool>{true, false, false}));
    EXPECT_FALSE(m.evaluate(q0, std::vector<bool>{false, false, false}));
    EXPECT_NE(q0, m.variable(1));
    EXPECT_EQ(q0, m.variable(0));
    EXPECT_THROW(m.variable(3), std::out_of_range);
}

TEST(Bdd, apply_examples) {
    Manager m(2);
    Bdd q0 = m.variable(0);
    Bdd q1 = m.variable(1);
    EXPECT_TRUE((q0 & ~q0).is_false());
    EXPECT_EQ(q0 ^ m.bdd_false(), q0);
    Bdd same = (q0 & q1) | (~q0 & ~q1);
    std::vector<bool> expected = {true, false, false, true};  // x = q0 + 2 q1
    for (std::uint32_t x = 0; x < 4; ++x) {
        EXPECT_EQ(m.evaluate(same, assignment_of(x, 2)), expected[x]) << x;
    }
}

TEST(Bdd, mixed_managers_rejected) {
    Manager a(2);
    Manager b(2);
    EXPECT_THROW(a.variable(0) & b.variable(0), std::invalid_argument);
}

TEST(Bdd, negate_examples) {
    Manager m(2);
    EXPECT_TRUE((~m.bdd_true()).is_false());
    Bdd f = m.variable(0) | m.variable(1);
    EXPECT_EQ(~~f, f);
    EXPECT_TRUE(m.evaluate(~m.variable(0), std::vector<bool>{false, false}));
}

TEST(Bdd, cofactor_examples) {
    Manager m(3);
    Bdd q0 = m.variable(0);
    Bdd q1 = m.variable(1);
    EXPECT_EQ(m.cofactor(q0 & q1, 0, true), q1);
    Bdd bell = (q0 & q1) | (~q0 & ~q1);
    std::pair<Var, bool> one{0, true};
    EXPECT_EQ(m.cofactor(bell, std::span(&one, 1)), q1);
    EXPECT_EQ(m.cofactor(bell, std::span<const std::pair<Var, bool>>{}), bell);
    std::vector<std::pair<Var, bool>> both = {{1, false}, {0, false}};
    EXPECT_TRUE(m.cofactor(bell, both).is_true());
}

TEST(Bdd, substitute_examples) {
    Manager m(2);
    Bdd q0 = m.variable(0);
    Bdd q1 = m.variable(1);
    std::pair<Var, Bdd> flip{0, ~q0};
    EXPECT_EQ(m.substitute(~q0 & ~q1, std::span(&flip, 1)), q0 & ~q1);
    std::pair<Var, Bdd> cnot{1, q1 ^ q0};
    EXPECT_EQ(m.substitute(q1, std::span(&cnot, 1)), q0 ^ q1);
}

TEST(Bdd, swap_substitution_is_involution) {
    Manager m(4);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        Bdd f = random_function(m, rng, 4, 4).f;
        Var i = static_cast<Var>(rng() % 4);
        Var j = (i + 1 + rng() % 3) % 4;
        std::vector<std::pair<Var, Bdd>> swap = {{i, m.variable(j)}, {j, m.variable(i)}};
        EXPECT_EQ(m.substitute(m.substitute(f, swap), swap), f);
    }
}

TEST(Bdd, sat_count_examples) {
    Manager m(3);
    EXPECT_EQ(m.sat_count(m.bdd_true(), 3), 8);
    EXPECT_EQ(m.sat_count(m.variable(0) & m.variable(1), 3), 2);
    EXPECT_EQ(m.sat_count(m.variable(0) & m.variable(1), 2), 1);
    EXPECT_THROW(m.sat_count(m.variable(2), 2), std::invalid_argument);
}

TEST(Bdd, sat_count_matches_enumeration) {
    const Var n = 12;
    Manager m(n);
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        RandomFunction rf = random_function(m, rng, n, 6);
        std::uint64_t brute = 0;
        for (std::uint32_t x = 0; x < (1u << n); ++x) {
            brute += m.evaluate(rf.f, assignment_of(x, n)) ? 1 : 0;
        }
        EXPECT_EQ(m.sat_count(rf.f, n), brute);
        EXPECT_EQ(m.sat_count(rf.f, n) + m.sat_count(~rf.f, n), BigInt(1) << n);
    }
}

TEST(Bdd, apply_agrees_with_truth_tables) {
    const Var n = 4;
    Manager m(n);
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 200; ++trial) {
        RandomFunction rf = random_function(m, rng, n, 3);
        for (std::uint32_t x = 0; x < 16; ++x) {
            ASSERT_EQ(m.evaluate(rf.f, assignment_of(x, n)), rf.table[x]);
        }
    }
}

TEST(Bdd, canonicity_after_operation_sequences) {
    const Var n = 4;
    Manager m(n);
    std::mt19937_64 rng(77);
    std::vector<RandomFunction> fs;
    for (int i = 0; i < 150; ++i) {
        fs.push_back(random_function(m, rng, n, 3));
    }
    for (std::size_t i = 0; i < fs.size(); ++i) {
        for (std::size_t j = 0; j < fs.size(); ++j) {
            EXPECT_EQ(fs[i].table == fs[j].table, fs[i].f == fs[j].f);
        }
    }
}

TEST(Bdd, substitute_agrees_with_rewritten_evaluation) {
    const Var n = 4;
    Manager m(n);
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 100; ++trial) {
        RandomFunction f = random_function(m, rng, n, 3);
        std::vector<std::pair<Var, Bdd>> map;
        std::vector<RandomFunction> replacement(n);
        std::vector<bool> mapped(n, false);
        for (Var v = 0; v < n; ++v) {
            if (rng() % 2) {
                replacement[v] = random_function(m, rng, n, 2);
                mapped[v] = true;
                map.emplace_back(v, replacement[v].f);
            }
        }
        Bdd g = m.substitute(f.f, map);
        for (std::uint32_t x = 0; x < 16; ++x) {
            std::uint32_t rewritten = 0;
            for (Var v = 0; v < n; ++v) {
                bool bit = mapped[v] ? replacement[v].table[x] : ((x >> v) & 1u) != 0;
                rewritten |= (bit ? 1u : 0u) << v;
            }
            ASSERT_EQ(m.evaluate(g, assignment_of(x, n)), f.table[rewritten]);
        }
    }
}

TEST(Bdd, dot_export_names_nodes) {
    Manager m(2);
    std::string dot = m.to_dot(m.variable(0) & m.variable(1));
    EXPECT_NE(dot.find("label=\"q0\""), std::string::npos);
    EXPECT_NE(dot.find("label=\"q1\""), std::string::npos);
}

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

#include <random>

#include "gtest/gtest.h"

#include "qseq/dense_state.hpp"
#include "test_util.hpp"

using namespace qseq;
using qseq::bdd::Bdd;
using qseq::testing_util::random_bits;
using qseq::testing_util::random_gate;

namespace {

OmegaInt unit() { return {0, 0, 0, 1}; }

bool all_false_except(const SymbolicState& s, int u, unsigned i) {
    for (int c = 0; c < 4; ++c) {
        for (unsigned j = 0; j < s.width(); ++j) {
            if ((c != u || j != i) && !s.slice(c, j).is_false()) {
                return false;
            }
        }
    }
    return true;
}

/// A random state on n qubits together with its dense twin.
struct Twin {
    SymbolicState sym;
    oracle::DenseState dense;
};

Twin random_twin(std::mt19937_64& rng, Qubit n, int gates) {
    std::string bits = random_bits(rng, n);
    Twin t{init_basis(n, bits), oracle::dense_basis(n, bits)};
    for (int i = 0; i < gates; ++i) {
        GateOp g = random_gate(rng, n);
        t.sym = apply_gate(t.sym, g);
        t.dense = oracle::dense_apply(t.dense, g);
    }
    return t;
}

SymbolicState run(SymbolicState s, std::initializer_list<GateOp> gates) {
    for (const GateOp& g : gates) {
        s = apply_gate(s, g);
    }
    return s;
}

SymbolicState bell() {
    return run(init_basis(2, "00"), {GateOp::single(GateKind::H, 0), GateOp::cx(0, 1)});
}

}  // namespace

TEST(SymbolicState, init_basis_examples) {
    SymbolicState s = init_basis(2, "00");
    bdd::Manager& m = s.manager();
    EXPECT_EQ(s.k(), 0u);
    EXPECT_EQ(s.width(), 2u);
    EXPECT_EQ(s.slice(kCompD, 0), ~m.variable(0) & ~m.variable(1));
    EXPECT_TRUE(all_false_except(s, kCompD, 0));

    SymbolicState one = init_basis(1, "1");
    EXPECT_EQ(one.slice(kCompD, 0), one.manager().variable(0));

    Amplitudes a = extract_amplitudes(init_basis(3, "101"));
    ASSERT_EQ(a.entries.size(), 1u);
    EXPECT_EQ(a.entries[0].first, 0b101u);
    EXPECT_EQ(a.entries[0].second, unit());

    EXPECT_THROW(init_basis(2, "0"), std::invalid_argument);
}

TEST(SymbolicState, gate_examples) {
    SymbolicState x = apply_gate(init_basis(2, "00"), GateOp::single(GateKind::X, 0));
    bdd::Manager& m = x.manager();
    EXPECT_EQ(x.slice(kCompD, 0), m.variable(0) & ~m.variable(1));

    SymbolicState h = apply_gate(init_basis(1, "0"), GateOp::single(GateKind::H, 0));
    EXPECT_EQ(h.k(), 1u);
    EXPECT_TRUE(h.slice(kCompD, 0).is_true());
    EXPECT_TRUE(all_false_except(h, kCompD, 0));

    SymbolicState ht = apply_gate(h, GateOp::single(GateKind::T, 0));
    bdd::Manager& m1 = ht.manager();
    EXPECT_EQ(ht.k(), 1u);
    EXPECT_EQ(ht.slice(kCompD, 0), ~m1.variable(0));
    EXPECT_EQ(ht.slice(kCompC, 0), m1.variable(0));
    // Cross-check against the dense oracle.
    oracle::DenseState d = oracle::dense_basis(1, "0");
    d = oracle::dense_apply(d, GateOp::single(GateKind::H, 0));
    d = oracle::dense_apply(d, GateOp::single(GateKind::T, 0));
    EXPECT_EQ(extract_amplitudes(ht), oracle::dense_amplitudes(d));

    SymbolicState b = bell();
    bdd::Manager& mb = b.manager();
    EXPECT_EQ(b.k(), 1u);
    EXPECT_EQ(b.slice(kCompD, 0), (mb.variable(0) & mb.variable(1)) | (~mb.variable(0) & ~mb.variable(1)));
    EXPECT_TRUE(all_false_except(b, kCompD, 0));
}

TEST(SymbolicState, extract_examples) {
    Amplitudes a = extract_amplitudes(init_basis(2, "01"));
    EXPECT_EQ(a.k, 0u);
    ASSERT_EQ(a.entries.size(), 1u);
    EXPECT_EQ(a.entries[0].first, 1u);

    Amplitudes b = extract_amplitudes(bell());
    EXPECT_EQ(b.k, 1u);
    ASSERT_EQ(b.entries.size(), 2u);
    EXPECT_EQ(b.entries[0], std::make_pair(std::uint64_t{0}, unit()));
    EXPECT_EQ(b.entries[1], std::make_pair(std::uint64_t{3}, unit()));

    EXPECT_THROW(extract_amplitudes(init_basis(5, "00000"), 4), std::length_error);
}

TEST(SymbolicState, mid_measure_examples) {
    SymbolicState b = mid_measure(bell(), 0, true);
    bdd::Manager& m = b.manager();
    EXPECT_EQ(b.k(), 1u);
    EXPECT_EQ(b.slice(kCompD, 0), m.variable(0) & m.variable(1));
    EXPECT_EQ(norm_sq(b), RootTwoRational(Rational(1, 2)));

    SymbolicState zero = init_basis(1, "0");
    EXPECT_EQ(mid_measure(zero, 0, false), zero);
    SymbolicState gone = mid_measure(zero, 0, true);
    for (int u = 0; u < 4; ++u) {
        for (const Bdd& f : gone.component(u)) {
            EXPECT_TRUE(f.is_false());
        }
    }
    EXPECT_TRUE(norm_sq(gone).is_zero());
}

TEST(SymbolicState, get_prob_examples) {
    auto [p0, p1] = get_prob(init_basis(1, "0"), 0);
    EXPECT_EQ(p0, RootTwoRational(1));
    EXPECT_EQ(p1, RootTwoRational(0));
    auto [b0, b1] = get_prob(bell(), 0);
    EXPECT_EQ(b0, RootTwoRational(Rational(1, 2)));
    EXPECT_EQ(b1, RootTwoRational(Rational(1, 2)));
}

TEST(SymbolicState, norm_of_basis_is_one) {
    std::mt19937_64 rng(8);
    for (Qubit n = 1; n <= 6; ++n) {
        EXPECT_EQ(norm_sq(init_basis(n, random_bits(rng, n))), RootTwoRational(1));
    }
}

TEST(SymbolicState, reduce_examples) {
    SymbolicState s = apply_gate(bell(), GateOp::single(GateKind::T, 1));
    std::array<Slices, 4> doubled;
    for (int u = 0; u < 4; ++u) {
        doubled[u] = s.component(u);
        doubled[u].insert(doubled[u].begin(), s.manager().bdd_false());
    }
    SymbolicState scaled(s.manager_ptr(), 0, s.k() + 2, doubled);
    EXPECT_EQ(extract_amplitudes(reduce(scaled)), extract_amplitudes(s));
    EXPECT_EQ(reduce(scaled), s);
    EXPECT_EQ(reduce(s), s);
}

TEST(SymbolicState, matches_dense_oracle_on_random_circuits) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        Qubit n = 1 + static_cast<Qubit>(rng() % 5);
        Twin t = random_twin(rng, n, 1 + static_cast<int>(rng() % 30));
        ASSERT_EQ(extract_amplitudes(t.sym), oracle::dense_amplitudes(t.dense)) << "trial " << trial;
        EXPECT_EQ(norm_sq(t.sym), RootTwoRational(1));
        EXPECT_EQ(reduce(t.sym), t.sym);
        for (Qubit q = 0; q < n; ++q) {
            auto [p0, p1] = get_prob(t.sym, q);
            EXPECT_EQ(std::make_pair(p0, p1), oracle::dense_prob(t.dense, q));
            EXPECT_EQ(p0 + p1, RootTwoRational(1));
        }
    }
}

TEST(SymbolicState, projection_consistency) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 40; ++trial) {
        Qubit n = 2 + static_cast<Qubit>(rng() % 4);
        Twin t = random_twin(rng, n, 20);
        Qubit q = static_cast<Qubit>(rng() % n);
        bool b = rng() & 1;
        auto probs = get_prob(t.sym, q);
        SymbolicState after = mid_measure(t.sym, q, b);
        EXPECT_EQ(norm_sq(after), b ? probs.second : probs.first);
        EXPECT_EQ(extract_amplitudes(after), oracle::dense_amplitudes(oracle::dense_measure(t.dense, q, b)));
        auto [a0, a1] = get_prob(after, q);
        EXPECT_EQ(a0 + a1, norm_sq(after));
    }
}

TEST(SymbolicState, successive_measurements_equal_joint_collapse) {
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 30; ++trial) {
        Qubit n = 3 + static_cast<Qubit>(rng() % 3);
        Twin t = random_twin(rng, n, 25);
        Qubit m = 1 + static_cast<Qubit>(rng() % (n - 1));
        std::vector<std::pair<Qubit, bool>> outcomes;
        SymbolicState successive = t.sym;
        for (Qubit q = 0; q < m; ++q) {
            bool b = rng() & 1;
            outcomes.emplace_back(q, b);
            successive = mid_measure(successive, q, b);
        }
        EXPECT_EQ(extract_amplitudes(successive), extract_amplitudes(collapse(t.sym, outcomes)));
    }
}

TEST(SymbolicState, gate_algebra_identities) {
    std::mt19937_64 rng(17);
    auto g1 = [](GateKind k, Qubit q) { return GateOp::single(k, q); };
    for (int trial = 0; trial < 10; ++trial) {
        SymbolicState s = random_twin(rng, 5, 25).sym;
        Qubit q = static_cast<Qubit>(rng() % 5);
        Qubit c = (q + 1 + rng() % 4) % 5;
        Amplitudes base = extract_amplitudes(s);
        auto amps = [&](std::initializer_list<GateOp> gates) { return extract_amplitudes(run(s, gates)); };
        EXPECT_EQ(amps({g1(GateKind::H, q), g1(GateKind::H, q)}), base);
        EXPECT_EQ(amps({g1(GateKind::S, q), g1(GateKind::S, q)}), amps({g1(GateKind::Z, q)}));
        EXPECT_EQ(amps({g1(GateKind::T, q), g1(GateKind::T, q)}), amps({g1(GateKind::S, q)}));
        EXPECT_EQ(amps({g1(GateKind::T, q), g1(GateKind::T, q), g1(GateKind::T, q), g1(GateKind::T, q)}),
                  amps({g1(GateKind::Z, q)}));
        EXPECT_EQ(amps({g1(GateKind::H, q), g1(GateKind::Z, q), g1(GateKind::H, q)}), amps({g1(GateKind::X, q)}));
        EXPECT_EQ(amps({GateOp::cx(c, q), GateOp::cx(c, q)}), base);
        EXPECT_EQ(amps({g1(GateKind::S, q), g1(GateKind::Sdg, q)}), base);
        EXPECT_EQ(amps({g1(GateKind::T, q), g1(GateKind::Tdg, q)}), base);
    }
}

TEST(SymbolicState, compose_examples) {
    auto m = std::make_shared<bdd::Manager>(2);
    SymbolicState internal = init_basis(m, "0", 1);
    EXPECT_EQ(internal.slice(kCompD, 0), ~m->variable(1));
    SymbolicState total = compose("0", internal);
    EXPECT_EQ(total.first_qubit(), 0u);
    EXPECT_EQ(total.slice(kCompD, 0), ~m->variable(0) & ~m->variable(1));

    auto m0 = std::make_shared<bdd::Manager>(1);
    SymbolicState s = init_basis(m0, "1", 0);
    EXPECT_EQ(compose("", s), s);

    // ext "1" (x) Bell on the internal pair.
    auto m3 = std::make_shared<bdd::Manager>(3);
    SymbolicState in = run(init_basis(m3, "00", 1), {GateOp::single(GateKind::H, 1), GateOp::cx(1, 2)});
    Amplitudes got = extract_amplitudes(compose("1", in));
    oracle::DenseState d = oracle::dense_basis(2, "00");
    d = oracle::dense_apply(oracle::dense_apply(d, GateOp::single(GateKind::H, 0)), GateOp::cx(0, 1));
    EXPECT_EQ(got, oracle::dense_amplitudes(oracle::dense_compose("1", d)));
    EXPECT_EQ(got.entries.size(), 2u);
    EXPECT_EQ(got.entries[0].first, 0b100u);
    EXPECT_EQ(got.entries[1].first, 0b111u);
}

TEST(SymbolicState, compose_rejects_support_violation) {
    auto m = std::make_shared<bdd::Manager>(2);
    SymbolicState full = init_basis(m, "10", 0);
    std::array<Slices, 4> comps = {full.component(0), full.component(1), full.component(2), full.component(3)};
    SymbolicState fake(m, 1, 0, comps);  // claims register {q1} but depends on q0
    EXPECT_THROW(compose("0", fake), std::invalid_argument);
}

TEST(SymbolicState, retain_examples) {
    SymbolicState b = bell();
    std::uint8_t one = 1;
    SymbolicState kept = retain(b, std::span(&one, 1));
    EXPECT_EQ(kept.first_qubit(), 1u);
    EXPECT_EQ(kept.k(), 1u);
    EXPECT_EQ(kept.slice(kCompD, 0), b.manager().variable(1));
    EXPECT_EQ(norm_sq(kept), RootTwoRational(Rational(1, 2)));
}

TEST(SymbolicState, compose_then_retain_round_trip) {
    std::mt19937_64 rng(91);
    for (int trial = 0; trial < 25; ++trial) {
        const Qubit m = 1 + static_cast<Qubit>(rng() % 2);
        const Qubit l = 1 + static_cast<Qubit>(rng() % 4);
        auto mgr = std::make_shared<bdd::Manager>(m + l);
        SymbolicState s = init_basis(mgr, random_bits(rng, l), m);
        for (int i = 0; i < 20; ++i) {
            GateOp g = random_gate(rng, l);
            for (Qubit& q : g.controls) q += m;
            for (Qubit& q : g.targets) q += m;
            s = apply_gate(s, g);
        }
        std::string ext = random_bits(rng, m);
        std::vector<std::uint8_t> outcomes;
        for (char c : ext) outcomes.push_back(c == '1');
        SymbolicState back = retain(compose(ext, s), outcomes);
        EXPECT_EQ(extract_amplitudes(back), extract_amplitudes(s));
        EXPECT_EQ(back, s);
    }
}

TEST(SymbolicState, retained_norm_equals_chained_probabilities) {
    std::mt19937_64 rng(404);
    for (int trial = 0; trial < 25; ++trial) {
        Twin t = random_twin(rng, 5, 30);
        Qubit m = 1 + static_cast<Qubit>(rng() % 3);
        std::vector<std::uint8_t> outcomes;
        SymbolicState chained = t.sym;
        RootTwoRational chained_p = 1;
        for (Qubit q = 0; q < m; ++q) {
            bool b = rng() & 1;
            outcomes.push_back(b);
            auto [p0, p1] = get_prob(chained, q);
            RootTwoRational joint = b ? p1 : p0;
            if (!chained_p.is_zero()) {
                chained_p *= joint / chained_p;  // conditional probability
            }
            chained = mid_measure(chained, q, b);
        }
        SymbolicState kept = retain(t.sym, outcomes);
        EXPECT_EQ(norm_sq(kept), chained_p);
        EXPECT_EQ(extract_amplitudes(kept), oracle::dense_amplitudes(oracle::dense_retain(t.dense, outcomes)));
    }
}

TEST(SymbolicState, wide_register_probabilities_are_exact) {
    // 100 qubits: H on a few, entangle, then every marginal is 1/2 or 0/1.
    SymbolicState s = init_basis(100, std::string(100, '0'));
    s = apply_gate(s, GateOp::single(GateKind::H, 3));
    s = apply_gate(s, GateOp::cx(3, 97));
    s = apply_gate(s, GateOp::single(GateKind::T, 97));
    EXPECT_EQ(norm_sq(s), RootTwoRational(1));
    auto [p0, p1] = get_prob(s, 97);
    EXPECT_EQ(p0, RootTwoRational(Rational(1, 2)));
    EXPECT_EQ(p1, RootTwoRational(Rational(1, 2)));
    auto [q0, q1] = get_prob(s, 50);
    EXPECT_EQ(q0, RootTwoRational(1));
    EXPECT_TRUE(q1.is_zero());
}

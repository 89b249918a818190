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

#include "qseq/dense_state.hpp"

#include <complex>
#include <random>

#include "gtest/gtest.h"

#include "test_util.hpp"

using namespace qseq;
using namespace qseq::oracle;
using qseq::testing_util::random_bits;
using qseq::testing_util::random_gate;

namespace {

using Complex = std::complex<double>;
using Matrix2 = std::array<Complex, 4>;

/// Independent floating-point reference: controlled 2x2 matrices on a complex vector.
struct FloatState {
    Qubit n;
    std::vector<Complex> v;
};

std::uint64_t mask(Qubit n, Qubit q) { return std::uint64_t{1} << (n - 1 - q); }

void controlled(FloatState& s, const std::vector<Qubit>& controls, Qubit t, const Matrix2& m) {
    std::uint64_t cm = 0;
    for (Qubit c : controls) cm |= mask(s.n, c);
    const std::uint64_t tm = mask(s.n, t);
    for (std::uint64_t i = 0; i < s.v.size(); ++i) {
        if ((i & tm) || (i & cm) != cm) continue;
        Complex x = s.v[i];
        Complex y = s.v[i | tm];
        s.v[i] = m[0] * x + m[1] * y;
        s.v[i | tm] = m[2] * x + m[3] * y;
    }
}

void float_apply(FloatState& s, const GateOp& g) {
    const double h = 1 / std::sqrt(2.0);
    const Complex i(0, 1);
    const Complex w = std::polar(1.0, M_PI / 4);
    const std::map<GateKind, Matrix2> mats = {
        {GateKind::X, {0, 1, 1, 0}},        {GateKind::Y, {0, -i, i, 0}},
        {GateKind::Z, {1, 0, 0, -1}},       {GateKind::H, {h, h, h, -h}},
        {GateKind::S, {1, 0, 0, i}},        {GateKind::Sdg, {1, 0, 0, -i}},
        {GateKind::T, {1, 0, 0, w}},        {GateKind::Tdg, {1, 0, 0, std::conj(w)}},
    };
    switch (g.kind) {
        case GateKind::CX:
        case GateKind::CCX:
        case GateKind::MCX:
            controlled(s, g.controls, g.targets[0], mats.at(GateKind::X));
            break;
        case GateKind::CZ:
        case GateKind::MCZ:
            controlled(s, g.controls, g.targets[0], mats.at(GateKind::Z));
            break;
        case GateKind::Swap: {
            Qubit a = g.targets[0];
            Qubit b = g.targets[1];
            controlled(s, {a}, b, mats.at(GateKind::X));
            controlled(s, {b}, a, mats.at(GateKind::X));
            controlled(s, {a}, b, mats.at(GateKind::X));
            break;
        }
        default:
            controlled(s, {}, g.targets[0], mats.at(g.kind));
    }
}

}  // namespace

TEST(DenseState, basis_layout_has_qubit0_as_msb) {
    DenseState s = dense_basis(3, "100");
    EXPECT_EQ(s.k, 0u);
    EXPECT_EQ(s.entries[4], OmegaInt(0, 0, 0, 1));
    EXPECT_THROW(dense_basis(15, std::string(15, '0')), std::length_error);
}

TEST(DenseState, matches_float_reference) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        Qubit n = 1 + static_cast<Qubit>(rng() % 5);
        std::string bits = random_bits(rng, n);
        DenseState d = dense_basis(n, bits);
        FloatState f{n, std::vector<Complex>(std::size_t{1} << n)};
        std::uint64_t idx = 0;
        for (Qubit q = 0; q < n; ++q) {
            if (bits[q] == '1') idx |= mask(n, q);
        }
        f.v[idx] = 1;
        for (int g = 0; g < 25; ++g) {
            GateOp op = random_gate(rng, n);
            d = dense_apply(d, op);
            float_apply(f, op);
        }
        const double scale = std::pow(std::sqrt(2.0), -static_cast<double>(d.k));
        for (std::size_t i = 0; i < f.v.size(); ++i) {
            Complex got = d.entries[i].to_complex() * scale;
            EXPECT_NEAR(got.real(), f.v[i].real(), 1e-9);
            EXPECT_NEAR(got.imag(), f.v[i].imag(), 1e-9);
        }
        EXPECT_EQ(dense_norm_sq(d), RootTwoRational(1));
    }
}

TEST(DenseState, compose_and_retain_are_inverse) {
    DenseState s = dense_apply(dense_basis(2, "00"), GateOp::single(GateKind::H, 1));
    std::uint8_t outcome[] = {1, 0};
    DenseState big = dense_compose("10", s);
    EXPECT_EQ(big.n, 4u);
    DenseState back = dense_retain(big, outcome);
    EXPECT_EQ(back.entries, s.entries);
    EXPECT_EQ(back.k, s.k);
}

TEST(DenseState, normalize_halves_even_entries) {
    DenseState s{1, 3, {OmegaInt(0, 0, 0, 2), OmegaInt(0, 2, 0, 0)}};
    DenseState n = dense_normalize(s);
    EXPECT_EQ(n.k, 1u);
    EXPECT_EQ(n.entries[0], OmegaInt(0, 0, 0, 1));
    EXPECT_EQ(n.entries[1], OmegaInt(0, 1, 0, 0));
}

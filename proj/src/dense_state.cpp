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

#include <stdexcept>
#include <string>

namespace qseq::oracle {

namespace {

std::uint64_t bit_of(Qubit n, Qubit q) { return std::uint64_t{1} << (n - 1 - q); }

bool is_set(std::uint64_t index, Qubit n, Qubit q) { return (index & bit_of(n, q)) != 0; }

bool all_set(std::uint64_t index, Qubit n, const std::vector<Qubit>& qubits) {
    for (Qubit q : qubits) {
        if (!is_set(index, n, q)) {
            return false;
        }
    }
    return true;
}

bool is_even(const BigInt& v) { return (v & 1) == 0; }

}  // namespace

DenseState dense_basis(Qubit n, std::string_view bits) {
    if (n > kMaxDenseQubits) {
        throw std::length_error("dense oracle is limited to " + std::to_string(kMaxDenseQubits) + " qubits");
    }
    if (bits.size() != n) {
        throw std::invalid_argument("dense_basis: length mismatch");
    }
    DenseState s{n, 0, std::vector<OmegaInt>(std::size_t{1} << n)};
    std::uint64_t index = 0;
    for (Qubit q = 0; q < n; ++q) {
        if (bits[q] == '1') {
            index |= bit_of(n, q);
        }
    }
    s.entries[index] = OmegaInt(0, 0, 0, 1);
    return s;
}

DenseState dense_apply(const DenseState& s, const GateOp& g) {
    g.validate(s.n);
    const Qubit n = s.n;
    const Qubit t = g.targets.front();
    const std::uint64_t size = s.entries.size();
    DenseState out = s;

    auto phase = [&](const std::vector<Qubit>& guard, int power) {
        for (std::uint64_t i = 0; i < size; ++i) {
            if (all_set(i, n, guard)) {
                out.entries[i] = omega_times_power(s.entries[i], power);
            }
        }
    };

    switch (g.kind) {
        case GateKind::X:
        case GateKind::CX:
        case GateKind::CCX:
        case GateKind::MCX:
            for (std::uint64_t i = 0; i < size; ++i) {
                if (all_set(i, n, g.controls)) {
                    out.entries[i ^ bit_of(n, t)] = s.entries[i];
                }
            }
            break;
        case GateKind::Swap: {
            Qubit u = g.targets[1];
            for (std::uint64_t i = 0; i < size; ++i) {
                if (is_set(i, n, t) != is_set(i, n, u)) {
                    out.entries[i ^ bit_of(n, t) ^ bit_of(n, u)] = s.entries[i];
                }
            }
            break;
        }
        case GateKind::Z:
        case GateKind::CZ:
        case GateKind::MCZ:
            phase(g.operands(), 4);
            break;
        case GateKind::S: phase({t}, 2); break;
        case GateKind::Sdg: phase({t}, 6); break;
        case GateKind::T: phase({t}, 1); break;
        case GateKind::Tdg: phase({t}, 7); break;
        case GateKind::Y:
            // [[0, -i], [i, 0]]
            for (std::uint64_t i = 0; i < size; ++i) {
                if (is_set(i, n, t)) {
                    out.entries[i] = omega_times_power(s.entries[i ^ bit_of(n, t)], 2);
                } else {
                    out.entries[i] = omega_times_power(s.entries[i ^ bit_of(n, t)], 6);
                }
            }
            break;
        case GateKind::H:
            for (std::uint64_t i = 0; i < size; ++i) {
                if (!is_set(i, n, t)) {
                    const OmegaInt& zero = s.entries[i];
                    const OmegaInt& one = s.entries[i | bit_of(n, t)];
                    out.entries[i] = zero + one;
                    out.entries[i | bit_of(n, t)] = zero - one;
                }
            }
            out.k += 1;
            break;
    }
    return out;
}

std::pair<RootTwoRational, RootTwoRational> dense_prob(const DenseState& s, Qubit t) {
    RootTwoRational p0;
    RootTwoRational p1;
    for (std::uint64_t i = 0; i < s.entries.size(); ++i) {
        (is_set(i, s.n, t) ? p1 : p0) += omega_sq_norm(s.entries[i]);
    }
    RootTwoRational scale(pow2(-static_cast<int>(s.k)));
    return {p0 * scale, p1 * scale};
}

DenseState dense_measure(const DenseState& s, Qubit t, bool outcome) {
    DenseState out = s;
    for (std::uint64_t i = 0; i < s.entries.size(); ++i) {
        if (is_set(i, s.n, t) != outcome) {
            out.entries[i] = OmegaInt();
        }
    }
    return out;
}

RootTwoRational dense_norm_sq(const DenseState& s) {
    auto [p0, p1] = dense_prob(s, 0);
    return p0 + p1;
}

DenseState dense_compose(std::string_view ext_bits, const DenseState& s) {
    const auto m = static_cast<Qubit>(ext_bits.size());
    DenseState ext = dense_basis(m, ext_bits);
    if (m + s.n > kMaxDenseQubits) {
        throw std::length_error("dense_compose: result too large");
    }
    DenseState out{m + s.n, s.k, std::vector<OmegaInt>(std::size_t{1} << (m + s.n))};
    for (std::uint64_t e = 0; e < ext.entries.size(); ++e) {
        if (ext.entries[e].is_zero()) {
            continue;
        }
        for (std::uint64_t i = 0; i < s.entries.size(); ++i) {
            out.entries[(e << s.n) | i] = s.entries[i];
        }
    }
    return out;
}

DenseState dense_retain(const DenseState& s, std::span<const std::uint8_t> outcomes) {
    const auto m = static_cast<Qubit>(outcomes.size());
    const Qubit l = s.n - m;
    std::uint64_t prefix = 0;
    for (Qubit j = 0; j < m; ++j) {
        prefix = (prefix << 1) | (outcomes[j] ? 1u : 0u);
    }
    DenseState out{l, s.k, std::vector<OmegaInt>(std::size_t{1} << l)};
    for (std::uint64_t i = 0; i < out.entries.size(); ++i) {
        out.entries[i] = s.entries[(prefix << l) | i];
    }
    return out;
}

DenseState dense_normalize(DenseState s) {
    while (s.k >= 2) {
        for (const OmegaInt& v : s.entries) {
            if (!is_even(v.a) || !is_even(v.b) || !is_even(v.c) || !is_even(v.d)) {
                return s;
            }
        }
        for (OmegaInt& v : s.entries) {
            v = OmegaInt(v.a / 2, v.b / 2, v.c / 2, v.d / 2);
        }
        s.k -= 2;
    }
    return s;
}

Amplitudes dense_amplitudes(const DenseState& s) {
    DenseState norm = dense_normalize(s);
    Amplitudes out{norm.n, norm.k, {}};
    for (std::uint64_t i = 0; i < norm.entries.size(); ++i) {
        if (!norm.entries[i].is_zero()) {
            out.entries.emplace_back(i, norm.entries[i]);
        }
    }
    return out;
}

}  // namespace qseq::oracle

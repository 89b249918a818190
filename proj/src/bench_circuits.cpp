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

#include "qseq/bench_circuits.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace qseq::bench {

namespace {

std::string reg(const std::string& name, unsigned i) { return name + "[" + std::to_string(i) + "]"; }

/// Multi-controlled X written with the smallest matching gate.
std::string mcx(const std::vector<std::string>& controls, const std::string& target) {
    std::string head;
    switch (controls.size()) {
        case 0: head = "x "; break;
        case 1: head = "cx "; break;
        case 2: head = "ccx "; break;
        default: head = "ctrl(" + std::to_string(controls.size()) + ") @ x "; break;
    }
    std::string out = head;
    for (const std::string& c : controls) out += c + ", ";
    return out + target + ";";
}

std::string mcz(const std::vector<std::string>& qubits) {
    const std::size_t controls = qubits.size() - 1;
    std::string out = controls == 0 ? "z " : controls == 1 ? "cz " : "ctrl(" + std::to_string(controls) + ") @ z ";
    for (std::size_t i = 0; i < qubits.size(); ++i) out += (i ? ", " : "") + qubits[i];
    return out + ";";
}

void header(std::ostringstream& out) { out << "OPENQASM 3.0;\ninclude \"stdgates.inc\";\n"; }

std::uint64_t pick(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

}  // namespace

std::string gen_rus_x(int success_bit) {
    if (success_bit != 0 && success_bit != 1) {
        throw std::invalid_argument("rus_x: success bit must be 0 or 1");
    }
    const int fail_bit = 1 - success_bit;
    std::ostringstream out;
    header(out);
    out << "qubit[2] q;\n"
        << "bit c = " << fail_bit << ";\n"
        << "while (c == " << fail_bit << ") {\n"
        << "    h q[0];\n"
        << "    cx q[0], q[1];\n"
        << "    c = measure q[0];\n";
    if (fail_bit == 1) {
        // The ancilla holds |1> whenever the loop repeats.
        out << "    reset q[0];\n";
    }
    out << "}\n";
    return out.str();
}

std::string gen_qrw(unsigned ell) {
    if (ell < 2) {
        throw std::invalid_argument("qrw: need at least 2 position qubits");
    }
    std::ostringstream out;
    header(out);
    out << "qubit flag;\nqubit coin;\nqubit[" << ell << "] pos;\nbit c = 0;\n"
        << "while (c == 0) {\n"
        << "    h coin;\n";
    auto ladder_gate = [&](unsigned i) {
        std::vector<std::string> controls = {"coin"};
        for (unsigned j = 0; j < i; ++j) controls.push_back(reg("pos", j));
        out << "    " << mcx(controls, reg("pos", i)) << "\n";
    };
    out << "    x coin;\n";
    for (unsigned i = ell; i-- > 0;) ladder_gate(i);  // +1 when coin = 0
    out << "    x coin;\n";
    for (unsigned i = 0; i < ell; ++i) ladder_gate(i);  // -1 when coin = 1
    std::vector<std::string> all = {"coin"};
    for (unsigned j = 0; j < ell; ++j) all.push_back(reg("pos", j));
    out << "    " << mcx(all, "flag") << "\n"
        << "    c = measure flag;\n"
        << "}\n";
    return out.str();
}

std::string gen_grover(unsigned nd, std::uint64_t marked) {
    if (nd < 2 || nd > 63) {
        throw std::invalid_argument("grover: need 2..63 data qubits");
    }
    if ((marked >> nd) != 0) {
        throw std::invalid_argument("grover: marked index out of range");
    }
    std::vector<std::string> data;
    std::vector<std::string> zeros;
    for (unsigned j = 0; j < nd; ++j) {
        data.push_back(reg("d", j));
        if (((marked >> (nd - 1 - j)) & 1u) == 0) zeros.push_back(data.back());
    }
    std::ostringstream out;
    header(out);
    out << "qubit flag;\nqubit[" << nd << "] d;\nbit c = 0;\n";
    for (const std::string& q : data) out << "h " << q << ";\n";
    auto layer = [&](const char* g, const std::vector<std::string>& qs) {
        for (const std::string& q : qs) out << "    " << g << " " << q << ";\n";
    };
    out << "while (c == 0) {\n";
    layer("x", zeros);
    out << "    " << mcz(data) << "\n";
    layer("x", zeros);
    layer("h", data);
    layer("x", data);
    out << "    " << mcz(data) << "\n";
    layer("x", data);
    layer("h", data);
    layer("x", zeros);
    out << "    " << mcx(data, "flag") << "\n";
    layer("x", zeros);
    out << "    c = measure flag;\n}\n";
    return out.str();
}

std::string gen_random_while(unsigned q, unsigned g, unsigned m, std::uint64_t seed) {
    if (q < 2 || g < 1) {
        throw std::invalid_argument("random_while: need q >= 2 and g >= 1");
    }
    std::mt19937_64 rng(seed);
    const unsigned pool = q - 1;  // q[1..q-1]; q[0] is reserved for the guard
    auto some_qubit = [&] { return reg("q", 1 + static_cast<unsigned>(pick(rng, pool))); };
    auto distinct = [&](unsigned count) {
        std::vector<unsigned> chosen;
        while (chosen.size() < count) {
            unsigned v = 1 + static_cast<unsigned>(pick(rng, pool));
            if (std::find(chosen.begin(), chosen.end(), v) == chosen.end()) chosen.push_back(v);
        }
        std::string out;
        for (std::size_t i = 0; i < chosen.size(); ++i) out += (i ? ", " : "") + reg("q", chosen[i]);
        return out;
    };
    static const char* const kSingle[] = {"x", "y", "z", "h", "s", "sdg", "t", "tdg"};
    static const char* const kDouble[] = {"cx", "cz", "swap"};
    auto gate = [&]() -> std::string {
        const std::uint64_t kind = pick(rng, 12);
        if (kind < 8 || pool < 2) {
            return std::string(kSingle[kind % 8]) + " " + some_qubit() + ";";
        }
        if (kind < 11 || pool < 3) {
            return std::string(kDouble[(kind - 8) % 3]) + " " + distinct(2) + ";";
        }
        return "ccx " + distinct(3) + ";";
    };

    const unsigned before = g / 4;
    const unsigned body = g / 2;
    const unsigned after = g - before - body;
    std::vector<unsigned> mids_at(body + 1, 0);
    for (unsigned j = 0; j < m; ++j) ++mids_at[pick(rng, body + 1)];

    std::ostringstream out;
    header(out);
    out << "qubit[" << q << "] q;\nbit c = 0;\n";
    if (m > 0) out << "bit[" << m << "] r;\n";
    out << "bit f;\n";
    for (unsigned i = 0; i < before; ++i) out << gate() << "\n";
    out << "while (c == 0) {\n    h q[0];\n";
    unsigned next_mid = 0;
    for (unsigned slot = 0; slot <= body; ++slot) {
        for (unsigned j = 0; j < mids_at[slot]; ++j, ++next_mid) {
            out << "    " << reg("r", next_mid) << " = measure " << some_qubit() << ";\n"
                << "    if (" << reg("r", next_mid) << " == 1) {\n"
                << "        " << kSingle[pick(rng, 8)] << " " << some_qubit() << ";\n"
                << "    }\n";
        }
        if (slot < body) out << "    " << gate() << "\n";
    }
    out << "    c = measure q[0];\n}\n";
    for (unsigned i = 0; i < after; ++i) out << gate() << "\n";
    out << "f = measure q[1];\n";
    return out.str();
}

std::vector<std::uint8_t> termination_pattern(unsigned k, int success_bit) {
    if (k == 0) {
        throw std::invalid_argument("termination_pattern: k must be at least 1");
    }
    std::vector<std::uint8_t> p(k, static_cast<std::uint8_t>(1 - success_bit));
    p.back() = static_cast<std::uint8_t>(success_bit);
    return p;
}

BenchProgram generate(const std::string& family, const std::vector<std::pair<std::string, std::int64_t>>& params) {
    auto get = [&](const std::string& key, std::int64_t fallback) {
        for (const auto& [k, v] : params) {
            if (k == key) return v;
        }
        return fallback;
    };
    auto non_negative = [](std::int64_t v, const char* what) {
        if (v < 0) throw std::invalid_argument(std::string(what) + " must be non-negative");
        return static_cast<std::uint64_t>(v);
    };
    BenchProgram b;
    b.family = family;
    if (family == "rus_x") {
        const std::int64_t s = get("success", 1);
        b.params = {{"success", s}};
        b.text = gen_rus_x(static_cast<int>(s));
        b.qubits = 2;
    } else if (family == "qrw") {
        const auto ell = static_cast<unsigned>(non_negative(get("ell", 8), "ell"));
        b.params = {{"ell", ell}};
        b.text = gen_qrw(ell);
        b.qubits = ell + 2;
    } else if (family == "grover") {
        const auto nd = static_cast<unsigned>(non_negative(get("nd", 4), "nd"));
        const std::uint64_t marked = non_negative(get("marked", (std::int64_t{1} << nd) - 1), "marked");
        b.params = {{"nd", nd}, {"marked", static_cast<std::int64_t>(marked)}};
        b.text = gen_grover(nd, marked);
        b.qubits = nd + 1;
    } else if (family == "random_while") {
        const auto q = static_cast<unsigned>(non_negative(get("q", 100), "q"));
        const auto g = static_cast<unsigned>(non_negative(get("g", 50), "g"));
        const auto m = static_cast<unsigned>(non_negative(get("m", 5), "m"));
        const std::uint64_t seed = non_negative(get("seed", 1), "seed");
        b.params = {{"q", q}, {"g", g}, {"m", m}, {"seed", static_cast<std::int64_t>(seed)}};
        b.text = gen_random_while(q, g, m, seed);
        b.qubits = q;
    } else {
        throw std::invalid_argument("unknown benchmark family '" + family + "'");
    }
    return b;
}

}  // namespace qseq::bench

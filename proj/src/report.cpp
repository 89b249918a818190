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

#include "qseq/report.hpp"

#include <sstream>

namespace qseq::report {

using nlohmann::json;

namespace {

std::string rational_text(const Rational& r) {
    std::ostringstream out;
    out << numerator(r);
    if (denominator(r) != 1) out << "/" << denominator(r);
    return out.str();
}

/// Plain JSON integer when it fits, decimal string otherwise.
json big_json(const BigInt& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
        return static_cast<std::int64_t>(v);
    }
    return v.str();
}

json bit_value(const std::optional<std::uint8_t>& v) { return v ? json(static_cast<int>(*v)) : json(nullptr); }

}  // namespace

json scalar_json(const RootTwoRational& v) {
    return {{"rational", rational_text(v.rational_part())},
            {"sqrt2_coeff", rational_text(v.sqrt2_part())},
            {"float", v.to_double()}};
}

json state_json(const SymbolicState& s, Qubit limit) {
    if (s.qubit_count() > limit) {
        throw std::length_error("state has " + std::to_string(s.qubit_count()) +
                                " qubits; amplitude dumps are limited to " + std::to_string(limit));
    }
    Amplitudes amps = extract_amplitudes(s, limit);
    json list = json::array();
    for (const auto& [index, v] : amps.entries) {
        list.push_back({{"index", index}, {"a", big_json(v.a)}, {"b", big_json(v.b)}, {"c", big_json(v.c)},
                        {"d", big_json(v.d)}});
    }
    RootTwoRational n = norm_sq(s);
    return {{"n", amps.n},
            {"k", amps.k},
            {"r", s.width()},
            {"amplitudes", list},
            {"norm_sq", {{"p", rational_text(n.rational_part())}, {"q", rational_text(n.sqrt2_part())}}}};
}

json run_json(const qasm::ProgramIR& ir, const RunResult& r, const JsonOptions& opts) {
    json bits = json::object();
    for (qasm::BitIndex b = 0; b < r.store.size(); ++b) bits[r.store.name(b)] = bit_value(r.store.get(b));

    json outcomes = json::array();
    for (const MeasurementEvent& e : r.events) {
        outcomes.push_back({{"measurement", e.measurement},
                            {"qubit", ir.qubit_name(e.qubit)},
                            {"outcome", e.outcome},
                            {"conditional", scalar_json(e.conditional)}});
    }
    json deferred = json::array();
    for (const DeferredMeasurement& d : r.deferred) {
        json entry = {{"measurement", d.measurement},
                      {"qubit", ir.qubit_name(d.qubit)},
                      {"index", d.qubit},
                      {"p0", scalar_json(d.p0)},
                      {"p1", scalar_json(d.p1)}};
        entry["bit"] = d.bit ? json(ir.bit_names[*d.bit]) : json(nullptr);
        deferred.push_back(std::move(entry));
    }
    json out = {{"status", std::string(status_name(r.status))},
                {"p_global", scalar_json(r.p_global)},
                {"classical_bits", bits},
                {"iterations", r.total_iterations},
                {"loop_iterations", r.loop_iterations},
                {"outcomes", outcomes},
                {"deferred_measurements", deferred},
                {"stats",
                 {{"peak_nodes", r.stats.peak_nodes},
                  {"slice_nodes", r.stats.slice_nodes},
                  {"wmc_count_calls", r.stats.wmc_count_calls}}}};
    if (opts.timing) out["stats"]["time"] = r.stats.seconds;
    if (opts.dump_state) out["state"] = state_json(r.state, opts.limit);
    return out;
}

json reach_json(const qasm::ProgramIR& ir, const ReachResult& r, const JsonOptions& opts) {
    json out = run_json(ir, r.run, opts);
    out["reachable"] = r.reachable;
    out["probability"] = scalar_json(r.probability);
    return out;
}

json diagnostics_json(const std::vector<qasm::Diagnostic>& diags) {
    json list = json::array();
    for (const qasm::Diagnostic& d : diags) {
        list.push_back({{"code", d.code}, {"message", d.message}, {"line", d.pos.line}, {"col", d.pos.col}});
    }
    return {{"diagnostics", list}};
}

json manifest_entry(const bench::BenchProgram& b, const std::string& file) {
    json params = json::object();
    for (const auto& [k, v] : b.params) params[k] = v;
    return {{"family", b.family}, {"params", params}, {"qubits", b.qubits}, {"file", file}};
}

std::string run_text(const qasm::ProgramIR& ir, const RunResult& r) {
    std::ostringstream out;
    out << "status: " << status_name(r.status) << "\n"
        << "p_global: " << r.p_global.to_string() << " (" << r.p_global.to_float_string() << ")\n"
        << "iterations: " << r.total_iterations << "\n";
    for (const MeasurementEvent& e : r.events) {
        out << "  measure " << ir.qubit_name(e.qubit) << " -> " << int(e.outcome) << "  (p = "
            << e.conditional.to_float_string() << ")\n";
    }
    for (const DeferredMeasurement& d : r.deferred) {
        out << "deferred " << ir.qubit_name(d.qubit) << ": P(0) = " << d.p0.to_float_string()
            << ", P(1) = " << d.p1.to_float_string() << "\n";
    }
    out << "bits:";
    for (qasm::BitIndex b = 0; b < r.store.size(); ++b) {
        auto v = r.store.get(b);
        out << " " << r.store.name(b) << "=" << (v ? std::to_string(*v) : std::string("?"));
    }
    out << "\nnodes: " << r.stats.slice_nodes << " (peak " << r.stats.peak_nodes << "), time " << r.stats.seconds
        << " s\n";
    return out.str();
}

}  // namespace qseq::report

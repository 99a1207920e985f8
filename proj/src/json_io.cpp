// Copyright 2026 The swaptest authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "swaptest/json_io.hpp"

#include <bit>
#include <cmath>
#include <fstream>
#include <sstream>

namespace swaptest::io {

namespace {

json complex_to_json(const Complex& z) {
    return json::array({z.real(), z.imag()});
}

Complex complex_from_json(const json& j) {
    if (!j.is_array() || j.size() < 1 || j.size() > 2) {
        throw ValidationError("complex values must be [re] or [re, im] pairs");
    }
    const double re = j.at(0).get<double>();
    const double im = j.size() == 2 ? j.at(1).get<double>() : 0.0;
    return Complex(re, im);
}

} // namespace

json to_json(const qubit::PureState& state) {
    return amplitudes_to_json(state.amplitudes());
}

qubit::PureState state_from_json(const json& j) {
    auto amps = amplitudes_from_json(j);
    if (!std::has_single_bit(amps.size())) {
        throw ValidationError("state vectors must have power-of-two length");
    }
    const int n = std::countr_zero(amps.size());
    return qubit::PureState(n, std::move(amps));
}

json amplitudes_to_json(const std::vector<Complex>& amps) {
    json arr = json::array();
    for (const auto& a : amps) arr.push_back(complex_to_json(a));
    return arr;
}

std::vector<Complex> amplitudes_from_json(const json& j) {
    if (!j.is_array() || j.empty()) {
        throw ValidationError("amplitude vectors must be non-empty JSON arrays");
    }
    std::vector<Complex> amps;
    amps.reserve(j.size());
    for (const auto& entry : j) {
        if (entry.is_number()) {
            amps.emplace_back(entry.get<double>(), 0.0);
        } else {
            amps.push_back(complex_from_json(entry));
        }
    }
    return amps;
}

json to_json(const qubit::Circuit& circuit) {
    json arr = json::array();
    for (const auto& gate : circuit.gates) {
        arr.push_back({{"kind", std::string(qubit::gate_name(gate.kind))},
                       {"qubits", gate.qubits}});
    }
    return arr;
}

qubit::Circuit circuit_from_json(const json& j, int num_qubits) {
    if (!j.is_array()) {
        throw ValidationError("a circuit is a JSON list of {kind, qubits}");
    }
    qubit::Circuit circuit{num_qubits, {}};
    for (const auto& entry : j) {
        const auto kind = qubit::gate_kind_from_name(entry.at("kind").get<std::string>());
        if (!kind) {
            throw ValidationError("unknown gate kind '" +
                                  entry.at("kind").get<std::string>() + "'");
        }
        circuit.gates.push_back({*kind, entry.at("qubits").get<std::vector<int>>()});
    }
    return circuit;
}

json to_json(const fock::FockSuperposition& state) {
    json arr = json::array();
    for (const auto& [occ, amp] : state.terms()) {
        json occupations = json::array();
        for (const auto& [mode, count] : occ.entries()) {
            occupations.push_back(json::array({mode.internal, mode.path, count}));
        }
        arr.push_back({{"occupations", occupations}, {"amp", complex_to_json(amp)}});
    }
    return arr;
}

fock::FockSuperposition fock_from_json(const json& j, int internal_dim) {
    if (!j.is_array()) {
        throw ValidationError("a Fock state is a JSON list of {occupations, amp}");
    }
    auto state = fock::FockSuperposition::zero(internal_dim);
    for (const auto& entry : j) {
        std::vector<std::pair<fock::Mode, int>> occ;
        for (const auto& triple : entry.at("occupations")) {
            occ.emplace_back(fock::Mode{triple.at(0).get<int>(),
                                        triple.at(1).get<std::string>()},
                             triple.at(2).get<int>());
        }
        state.add_term(fock::OccupationVector(std::move(occ)),
                       complex_from_json(entry.at("amp")));
    }
    return state;
}

json to_json(const fock::DetectorStats& stats) {
    return {{"p_upper_only", stats.p_upper_only},
            {"p_lower_only", stats.p_lower_only},
            {"p_coincidence", stats.p_coincidence},
            {"p_none", stats.p_none}};
}

json to_json(const protocols::PassStats& stats) {
    return {{"p_pass", stats.p_pass},
            {"p_fail", stats.p_fail},
            {"overlap_sq", stats.overlap_sq},
            {"outcome_distribution", stats.outcome_distribution}};
}

json to_json(const protocols::TestOutcome& outcome) {
    return {{"verdict", outcome.verdict == protocols::Verdict::Pass ? "Pass" : "Fail"},
            {"raw_bits", outcome.raw_bits}};
}

json to_json(const protocols::OpticalChainStats& chain) {
    return {{"stats", to_json(chain.stats)},
            {"p_d3_only", chain.p_d3_only},
            {"p_d4_only", chain.p_d4_only},
            {"p_coincidence_d3d4", chain.p_coincidence_d3d4},
            {"p_none_d3d4", chain.p_none_d3d4},
            {"p_single_photon_d4", chain.p_single_photon_d4}};
}

json to_json(const verify::IdentityReport& report) {
    return {{"identity_name", report.identity_name},
            {"max_deviation", report.max_deviation},
            {"passed", report.passed},
            {"tolerance", report.tolerance}};
}

json to_json(const verify::AgreementReport& report) {
    json rows = json::array();
    for (const auto& row : report.rows) {
        json r = {{"d", row.d},
                  {"overlap_sq", row.overlap_sq},
                  {"analytic", row.analytic},
                  {"hom", row.hom},
                  {"optical", row.optical}};
        if (!std::isnan(row.ancilla)) r["ancilla"] = row.ancilla;
        if (!std::isnan(row.destructive)) r["destructive"] = row.destructive;
        rows.push_back(std::move(r));
    }
    return {{"trial_count", report.trials_per_dim},
            {"dims_tested", report.dims_tested},
            {"max_abs_error", report.max_abs_error},
            {"seed", report.seed},
            {"per_backend_pass_probs", rows}};
}

json to_json(const verify::MonteCarloEstimate& estimate) {
    return {{"estimate", estimate.estimate},
            {"std_error", estimate.std_error},
            {"shots", estimate.shots}};
}

json comparison_to_json(const fingerprint::Code& code, const std::string& x,
                        const std::string& y, int rounds,
                        const fingerprint::CompareResult& result) {
    json j = {{"x", x},
              {"y", y},
              {"code", {{"k", code.n_bits}, {"m", code.m}, {"delta", code.delta}}},
              {"rounds", rounds},
              {"verdict",
               result.verdict == fingerprint::CompareVerdict::Equal ? "Equal" : "Different"},
              {"p_false_equal_bound", fingerprint::false_equal_bound(code.delta, rounds)}};
    if (result.fail_round >= 0) {
        j["fail_round"] = result.fail_round;
    } else {
        j["fail_round"] = nullptr;
    }
    return j;
}

std::pair<std::vector<Complex>, double> parse_wavepacket_csv(const std::string& text) {
    std::vector<double> times;
    std::vector<Complex> samples;
    std::istringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r\n,") == std::string::npos) continue;
        std::istringstream fields(line);
        std::string field;
        std::vector<double> values;
        while (std::getline(fields, field, ',')) {
            try {
                values.push_back(std::stod(field));
            } catch (const std::exception&) {
                throw ValidationError("wavepacket CSV: cannot parse '" + field +
                                      "' as a number");
            }
        }
        if (values.size() < 2 || values.size() > 3) {
            throw ValidationError("wavepacket CSV rows must be t,re or t,re,im");
        }
        times.push_back(values[0]);
        samples.emplace_back(values[1], values.size() == 3 ? values[2] : 0.0);
    }
    if (samples.size() < 2) {
        throw ValidationError("wavepacket CSV needs at least two samples");
    }
    const double dt = (times.back() - times.front()) / (times.size() - 1);
    if (!(dt > 0.0)) {
        throw ValidationError("wavepacket CSV times must be increasing");
    }
    for (std::size_t i = 1; i < times.size(); ++i) {
        if (std::abs((times[i] - times[i - 1]) - dt) > 1e-6 * dt) {
            throw ValidationError("wavepacket CSV requires a uniform time grid");
        }
    }
    return {std::move(samples), dt};
}

std::pair<std::vector<Complex>, double> load_wavepacket_csv(const std::string& path) {
    std::ifstream file(path);
    if (!file) {
        throw ValidationError("cannot open wavepacket file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return parse_wavepacket_csv(buffer.str());
}

} // namespace swaptest::io

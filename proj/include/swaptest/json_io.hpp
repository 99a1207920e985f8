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

#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "swaptest/fingerprint.hpp"
#include "swaptest/fock.hpp"
#include "swaptest/protocols.hpp"
#include "swaptest/qubit.hpp"
#include "swaptest/verify.hpp"

namespace swaptest::io {

using json = nlohmann::json;

/// States serialize to an array of [re, im] pairs of length 2^n.
json to_json(const qubit::PureState& state);
qubit::PureState state_from_json(const json& j);

/// Raw complex vectors use the same [re, im] pair encoding.
json amplitudes_to_json(const std::vector<Complex>& amps);
std::vector<Complex> amplitudes_from_json(const json& j);

/// Circuits serialize to a list of {"kind": ..., "qubits": [...]}.
json to_json(const qubit::Circuit& circuit);
qubit::Circuit circuit_from_json(const json& j, int num_qubits);

/// Fock states serialize to a list of
/// {"occupations": [[internal, path, count], ...], "amp": [re, im]}.
json to_json(const fock::FockSuperposition& state);
fock::FockSuperposition fock_from_json(const json& j, int internal_dim);

json to_json(const fock::DetectorStats& stats);
json to_json(const protocols::PassStats& stats);
json to_json(const protocols::TestOutcome& outcome);
json to_json(const protocols::OpticalChainStats& chain);
json to_json(const verify::IdentityReport& report);
json to_json(const verify::AgreementReport& report);
json to_json(const verify::MonteCarloEstimate& estimate);

/// The CLI-facing comparison record:
/// {x, y, code: {k, m, delta}, rounds, verdict, fail_round, p_false_equal_bound}.
json comparison_to_json(const fingerprint::Code& code, const std::string& x,
                        const std::string& y, int rounds,
                        const fingerprint::CompareResult& result);

/// Two-column (t, re) or three-column (t, re, im) CSV; returns the samples
/// and the uniform spacing. '#' comments and blank lines are skipped.
std::pair<std::vector<Complex>, double> load_wavepacket_csv(const std::string& path);
std::pair<std::vector<Complex>, double> parse_wavepacket_csv(const std::string& text);

} // namespace swaptest::io

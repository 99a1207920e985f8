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

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "swaptest/fock.hpp"
#include "swaptest/qubit.hpp"
#include "swaptest/random.hpp"

namespace swaptest::protocols {

enum class Verdict { Pass, Fail };

/// Exact outcome statistics of one comparison test. outcome_distribution is
/// keyed by the raw measurement record: the full bitstring for circuit
/// tests, the detector click pattern for optical ones.
struct PassStats {
    double p_pass = 0.0;
    double p_fail = 0.0;
    double overlap_sq = 0.0;
    std::map<std::string, double> outcome_distribution;
};

struct TestOutcome {
    Verdict verdict;
    std::string raw_bits;
};

/// Ancilla-based SWAP test: H on a fresh |0⟩ ancilla, one CSWAP per qubit
/// pair, H again, then read the ancilla. Pass = ancilla 0.
PassStats ancilla_swap_test_prob(const qubit::PureState& phi, const qubit::PureState& psi,
                                 int max_qubits = qubit::kDefaultMaxQubits);

/// The ancilla-free comparison circuit on |φ⟩⊗|ψ⟩: per qubit pair a CNOT
/// (control on the ψ side, target on the φ side) followed by H on the ψ
/// qubit, then a full measurement of both registers.
PassStats destructive_swap_test(const qubit::PureState& phi, const qubit::PureState& psi);

/// Diagnostic entry point for a joint (possibly entangled) 2n-qubit input.
/// Comparison semantics only hold for product inputs; this exists to study
/// what the circuit does to entangled states.
struct JointTestResult {
    double p_pass = 0.0;
    double p_fail = 0.0;
    std::map<std::string, double> outcome_distribution;
    qubit::PureState post_circuit_state;
};
JointTestResult destructive_swap_test_joint(const qubit::PureState& joint);

/// One sampled run of the destructive test.
TestOutcome destructive_swap_test_sample(const qubit::PureState& phi,
                                         const qubit::PureState& psi, RandomStream& rng);

/// Verdict rule for measurement records o1 (first register) and o2 (second
/// register): Fail iff the bitwise AND of o1 and o2 has odd parity. For one
/// qubit this is NAND of the two bits.
Verdict nand_verdict(std::string_view o1, std::string_view o2);

/// ((1 + overlap_sq)/2)^rounds, the probability of passing every round.
double repeated_pass_prob(double overlap_sq, int rounds);

/// Hong-Ou-Mandel test: |φ⟩ enters path U, |ψ⟩ enters path D, both meet a
/// 50% beam splitter, two binary detectors watch the outputs. A coincidence
/// is a failure. Click records: "10" upper only, "01" lower only,
/// "11" coincidence, "00" none.
std::pair<fock::DetectorStats, PassStats>
hom_swap_test(const std::vector<Complex>& phi_amps, const std::vector<Complex>& psi_amps);

/// Optical SWAP gate with a classical control bit: beam splitter, π phase
/// shift on the lower arm iff control, closing beam splitter.
fock::FockSuperposition optical_cswap(const fock::FockSuperposition& state, bool control,
                                      const std::string& upper = "U",
                                      const std::string& lower = "D");

/// Full interferometric SWAP test with an ancilla photon. The ancilla runs
/// through its own interferometer (paths AU/AD, detectors D1/D2); the test
/// photons meet one beam splitter (paths TU/TD, detectors D3/D4); an
/// idealized cross-phase couples AD and TD. Pass = D1 clicks.
struct OpticalChainStats {
    PassStats stats;
    // Test-side detector statistics (the D3/D4 pair).
    double p_d3_only = 0.0;
    double p_d4_only = 0.0;
    double p_coincidence_d3d4 = 0.0;
    double p_none_d3d4 = 0.0;
    // Probability of exactly one photon at D4 with D3 dark. Photon-number
    // conservation forces this to zero: a lone D4 photon implies a
    // coincidence was missed, which cannot happen.
    double p_single_photon_d4 = 0.0;
};
OpticalChainStats optical_swap_test_with_ancilla(const std::vector<Complex>& phi_amps,
                                                 const std::vector<Complex>& psi_amps);

/// The measurement circuit of the destructive test on 2n qubits
/// (registers [0,n) and [n,2n)).
qubit::Circuit destructive_test_circuit(int n);

/// The ancilla-test circuit on 2n+1 qubits (ancilla first).
qubit::Circuit ancilla_test_circuit(int n);

} // namespace swaptest::protocols

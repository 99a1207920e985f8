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

#include "swaptest/protocols.hpp"

#include <bit>
#include <cmath>
#include <numbers>

namespace swaptest::protocols {

using qubit::Circuit;
using qubit::GateKind;
using qubit::GateSpec;
using qubit::PureState;

namespace {

constexpr double kDistributionPrune = 1e-15;

void check_equal_width(const PureState& phi, const PureState& psi) {
    if (phi.num_qubits() != psi.num_qubits()) {
        throw ValidationError("compared states must have equal qubit counts");
    }
}

bool record_fails(std::uint64_t record, int n) {
    // record holds 2n bits, first register in the high half.
    const std::uint64_t o1 = record >> n;
    const std::uint64_t o2 = record & ((std::uint64_t{1} << n) - 1);
    return std::popcount(o1 & o2) % 2 == 1;
}

std::string record_bits(std::uint64_t record, int width) {
    std::string s(width, '0');
    for (int j = 0; j < width; ++j) {
        if (record & (std::uint64_t{1} << (width - 1 - j))) s[j] = '1';
    }
    return s;
}

} // namespace

Circuit destructive_test_circuit(int n) {
    if (n < 1) {
        throw ValidationError("destructive test needs at least one qubit per state");
    }
    Circuit circuit{2 * n, {}};
    for (int i = 0; i < n; ++i) {
        circuit.gates.push_back({GateKind::CNOT, {n + i, i}});
        circuit.gates.push_back({GateKind::H, {n + i}});
    }
    return circuit;
}

Circuit ancilla_test_circuit(int n) {
    Circuit circuit{2 * n + 1, {}};
    circuit.gates.push_back({GateKind::H, {0}});
    for (int i = 0; i < n; ++i) {
        circuit.gates.push_back({GateKind::CSWAP, {0, 1 + i, 1 + n + i}});
    }
    circuit.gates.push_back({GateKind::H, {0}});
    return circuit;
}

PassStats ancilla_swap_test_prob(const PureState& phi, const PureState& psi,
                                 int max_qubits) {
    check_equal_width(phi, psi);
    const int n = phi.num_qubits();
    if (2 * n + 1 > max_qubits) {
        throw CapacityError("ancilla test needs " + std::to_string(2 * n + 1) +
                            " qubits, above the cap of " + std::to_string(max_qubits));
    }
    PureState joint = qubit::tensor_product(
        qubit::tensor_product(qubit::zero_state(1), phi, max_qubits), psi, max_qubits);
    joint = qubit::apply_circuit(std::move(joint), ancilla_test_circuit(n));

    double p_fail = 0.0;
    const std::uint64_t anc = joint.qubit_mask(0);
    for (std::uint64_t k = 0; k < joint.dim(); ++k) {
        if (k & anc) p_fail += std::norm(joint[k]);
    }
    PassStats stats;
    stats.p_fail = p_fail;
    stats.p_pass = 1.0 - p_fail;
    stats.overlap_sq = qubit::overlap_sq(phi, psi);
    if (stats.p_pass > kDistributionPrune) stats.outcome_distribution["0"] = stats.p_pass;
    if (stats.p_fail > kDistributionPrune) stats.outcome_distribution["1"] = stats.p_fail;
    return stats;
}

namespace {

PassStats destructive_stats_from_joint(const PureState& joint, double overlap_sq_value) {
    const int n = joint.num_qubits() / 2;
    PassStats stats;
    double p_fail = 0.0;
    for (std::uint64_t record = 0; record < joint.dim(); ++record) {
        const double p = std::norm(joint[record]);
        if (record_fails(record, n)) p_fail += p;
        if (p > kDistributionPrune) {
            stats.outcome_distribution[record_bits(record, 2 * n)] = p;
        }
    }
    stats.p_fail = p_fail;
    stats.p_pass = 1.0 - p_fail;
    stats.overlap_sq = overlap_sq_value;
    return stats;
}

} // namespace

PassStats destructive_swap_test(const PureState& phi, const PureState& psi) {
    check_equal_width(phi, psi);
    const int n = phi.num_qubits();
    if (n < 1) {
        throw ValidationError("destructive test needs at least one qubit per state");
    }
    PureState joint = qubit::tensor_product(phi, psi);
    joint = qubit::apply_circuit(std::move(joint), destructive_test_circuit(n));
    return destructive_stats_from_joint(joint, qubit::overlap_sq(phi, psi));
}

JointTestResult destructive_swap_test_joint(const PureState& joint_input) {
    const int total = joint_input.num_qubits();
    if (total < 2 || total % 2 != 0) {
        throw ValidationError("joint destructive test needs an even qubit count >= 2");
    }
    const int n = total / 2;
    PureState post = qubit::apply_circuit(joint_input, destructive_test_circuit(n));
    JointTestResult result{0.0, 0.0, {}, post};
    for (std::uint64_t record = 0; record < post.dim(); ++record) {
        const double p = std::norm(post[record]);
        if (record_fails(record, n)) result.p_fail += p;
        if (p > kDistributionPrune) {
            result.outcome_distribution[record_bits(record, total)] = p;
        }
    }
    result.p_pass = 1.0 - result.p_fail;
    return result;
}

TestOutcome destructive_swap_test_sample(const PureState& phi, const PureState& psi,
                                         RandomStream& rng) {
    check_equal_width(phi, psi);
    const int n = phi.num_qubits();
    if (n < 1) {
        throw ValidationError("destructive test needs at least one qubit per state");
    }
    PureState joint = qubit::tensor_product(phi, psi);
    joint = qubit::apply_circuit(std::move(joint), destructive_test_circuit(n));
    std::vector<int> all(2 * n);
    for (int i = 0; i < 2 * n; ++i) all[i] = i;
    auto [bits, collapsed] = qubit::measure(joint, all, rng);
    const Verdict verdict = nand_verdict(std::string_view(bits).substr(0, n),
                                         std::string_view(bits).substr(n, n));
    return TestOutcome{verdict, bits};
}

Verdict nand_verdict(std::string_view o1, std::string_view o2) {
    if (o1.size() != o2.size()) {
        throw ValidationError("outcome records must have equal length");
    }
    int parity = 0;
    for (std::size_t i = 0; i < o1.size(); ++i) {
        if (o1[i] == '1' && o2[i] == '1') parity ^= 1;
    }
    return parity ? Verdict::Fail : Verdict::Pass;
}

double repeated_pass_prob(double overlap_sq, int rounds) {
    if (!(overlap_sq >= 0.0 && overlap_sq <= 1.0)) {
        throw ValidationError("overlap_sq must lie in [0, 1]");
    }
    if (rounds < 0) {
        throw ValidationError("round count must be non-negative");
    }
    return std::pow((1.0 + overlap_sq) / 2.0, rounds);
}

std::pair<fock::DetectorStats, PassStats>
hom_swap_test(const std::vector<Complex>& phi_amps, const std::vector<Complex>& psi_amps) {
    if (phi_amps.size() != psi_amps.size()) {
        throw ValidationError("compared photon states must have equal dimension");
    }
    auto joint = fock::product(fock::single_photon(phi_amps, "U"),
                               fock::single_photon(psi_amps, "D"));
    joint = fock::beam_splitter(joint, "U", "D");
    const fock::DetectorStats det = fock::detector_stats(joint, "U", "D");

    Complex inner(0.0, 0.0);
    double n_phi = 0.0, n_psi = 0.0;
    for (std::size_t i = 0; i < phi_amps.size(); ++i) {
        inner += std::conj(psi_amps[i]) * phi_amps[i];
        n_phi += std::norm(phi_amps[i]);
        n_psi += std::norm(psi_amps[i]);
    }
    PassStats stats;
    stats.overlap_sq = std::norm(inner) / (n_phi * n_psi);
    stats.p_fail = det.p_coincidence;
    stats.p_pass = 1.0 - det.p_coincidence;
    if (det.p_upper_only > kDistributionPrune)
        stats.outcome_distribution["10"] = det.p_upper_only;
    if (det.p_lower_only > kDistributionPrune)
        stats.outcome_distribution["01"] = det.p_lower_only;
    if (det.p_coincidence > kDistributionPrune)
        stats.outcome_distribution["11"] = det.p_coincidence;
    if (det.p_none > kDistributionPrune) stats.outcome_distribution["00"] = det.p_none;
    return {det, stats};
}

fock::FockSuperposition optical_cswap(const fock::FockSuperposition& state, bool control,
                                      const std::string& upper, const std::string& lower) {
    auto out = fock::beam_splitter(state, upper, lower);
    if (control) {
        out = fock::phase_shift(out, lower, std::numbers::pi);
    }
    return fock::beam_splitter(out, upper, lower);
}

OpticalChainStats optical_swap_test_with_ancilla(const std::vector<Complex>& phi_amps,
                                                 const std::vector<Complex>& psi_amps) {
    if (phi_amps.size() != psi_amps.size()) {
        throw ValidationError("compared photon states must have equal dimension");
    }
    const std::size_t d = phi_amps.size();
    std::vector<Complex> ancilla_amps(d, Complex(0.0, 0.0));
    ancilla_amps[0] = Complex(1.0, 0.0);

    auto state = fock::product(fock::single_photon(ancilla_amps, "AU"),
                               fock::product(fock::single_photon(phi_amps, "TU"),
                                             fock::single_photon(psi_amps, "TD")));
    state = fock::beam_splitter(state, "AU", "AD");
    state = fock::beam_splitter(state, "TU", "TD");
    state = fock::cross_phase(state, "AD", "TD");
    state = fock::beam_splitter(state, "AU", "AD");

    OpticalChainStats chain;
    std::map<std::string, double> clicks;
    for (const auto& [occ, amp] : state.terms()) {
        const double p = std::norm(amp);
        const bool d1 = occ.photons_on_path("AU") > 0;
        const bool d2 = occ.photons_on_path("AD") > 0;
        const int n_tu = occ.photons_on_path("TU");
        const int n_td = occ.photons_on_path("TD");
        if (d1) chain.stats.p_pass += p;
        if (n_tu > 0 && n_td > 0) {
            chain.p_coincidence_d3d4 += p;
        } else if (n_tu > 0) {
            chain.p_d3_only += p;
        } else if (n_td > 0) {
            chain.p_d4_only += p;
        } else {
            chain.p_none_d3d4 += p;
        }
        if (n_tu == 0 && n_td == 1) chain.p_single_photon_d4 += p;
        std::string pattern;
        pattern += d1 ? '1' : '0';
        pattern += d2 ? '1' : '0';
        pattern += (n_tu > 0) ? '1' : '0';
        pattern += (n_td > 0) ? '1' : '0';
        clicks[pattern] += p;
    }
    chain.stats.p_fail = 1.0 - chain.stats.p_pass;

    Complex inner(0.0, 0.0);
    double n_phi = 0.0, n_psi = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        inner += std::conj(psi_amps[i]) * phi_amps[i];
        n_phi += std::norm(phi_amps[i]);
        n_psi += std::norm(psi_amps[i]);
    }
    chain.stats.overlap_sq = std::norm(inner) / (n_phi * n_psi);
    for (const auto& [pattern, p] : clicks) {
        if (p > kDistributionPrune) chain.stats.outcome_distribution[pattern] = p;
    }
    return chain;
}

} // namespace swaptest::protocols

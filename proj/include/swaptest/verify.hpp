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

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "swaptest/qubit.hpp"
#include "swaptest/random.hpp"

namespace swaptest::verify {

struct IdentityReport {
    std::string identity_name;
    double max_deviation = 0.0;
    bool passed = false;
    double tolerance = 0.0;
};

/// Mechanical re-derivation of the circuit-identity chain behind the
/// destructive test: gate conjugation identities, CZ/CCZ symmetry, the
/// XOR-swap circuit, and the controlled-swap construction.
std::vector<IdentityReport> check_circuit_identities(double tol = 1e-10);

/// Exact ancilla statistics of the full controlled-phase test circuit vs
/// measuring the test qubits first and classically post-processing, over
/// random single-qubit pairs.
IdentityReport check_deferred_measurement(int trials, RandomStream& rng,
                                          double tol = 1e-10);

/// Both routes of the deferred-measurement check for one specific pair:
/// (ancilla fail probability, destructive fail probability).
std::pair<double, double> deferred_measurement_fail_probs(const qubit::PureState& phi,
                                                          const qubit::PureState& psi);

/// The controlled-phase test circuit on 3 qubits (ancilla, φ, ψ).
qubit::Circuit deferred_phase_test_circuit();

struct AgreementRow {
    int d = 0;
    double overlap_sq = 0.0;
    double analytic = 0.0;
    double ancilla = 0.0;     // NaN when d is not a power of two
    double destructive = 0.0; // NaN when d is not a power of two
    double hom = 0.0;
    double optical = 0.0;
};

struct AgreementReport {
    int trials_per_dim = 0;
    std::vector<int> dims_tested;
    double max_abs_error = 0.0;
    std::uint64_t seed = 0;
    std::vector<AgreementRow> rows;
};

/// Tabulates the pass probability of all four test routes plus the analytic
/// law (1 + |⟨ψ|φ⟩|²)/2 for random product pairs at each dimension. Circuit
/// routes run only for power-of-two d. Trials use streams derived from the
/// seed, so the report is reproducible and order-independent.
AgreementReport cross_backend_agreement(const std::vector<int>& dims, int trials_per_dim,
                                        std::uint64_t seed);

struct MonteCarloEstimate {
    double estimate = 0.0;
    double std_error = 0.0;
    long shots = 0;
};

/// Empirical pass frequency of a boolean sampler with the binomial standard
/// error √(p̂(1−p̂)/shots).
MonteCarloEstimate monte_carlo_estimate(const std::function<bool(RandomStream&)>& sampler,
                                        long shots, RandomStream& rng);

} // namespace swaptest::verify

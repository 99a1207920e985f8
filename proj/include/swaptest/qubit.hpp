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

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "swaptest/errors.hpp"
#include "swaptest/random.hpp"

namespace swaptest::qubit {

/// Hard cap on dense register width. Everything in this project needs 12 or
/// fewer qubits; the cap only guards against runaway allocations.
inline constexpr int kDefaultMaxQubits = 20;

/// Full-matrix extraction is quadratic in the dimension, so it gets a
/// tighter cap than plain state evolution.
inline constexpr int kMaxUnitaryQubits = 10;

/// Normalized amplitude vector over n qubits.
///
/// Index convention: qubit 0 is the most significant bit of the basis index,
/// so ket strings read left to right (|x⟩|y⟩ sits at index x*2+y for two
/// qubits).
class PureState {
  public:
    /// Takes ownership of 2^num_qubits amplitudes. The squared norm must be
    /// within 1e-9 of 1; the vector is then rescaled to machine precision.
    PureState(int num_qubits, std::vector<Complex> amplitudes);

    int num_qubits() const { return num_qubits_; }
    std::uint64_t dim() const { return amps_.size(); }
    const std::vector<Complex>& amplitudes() const { return amps_; }
    const Complex& operator[](std::uint64_t index) const { return amps_[index]; }
    double norm_sq() const;

    /// Bit mask selecting qubit q in a basis index (MSB-first convention).
    std::uint64_t qubit_mask(int q) const {
        return std::uint64_t{1} << (num_qubits_ - 1 - q);
    }

  private:
    friend PureState apply_gate(const PureState&, const struct GateSpec&);
    friend std::pair<std::string, PureState>
    measure(const PureState&, const std::vector<int>&, RandomStream&);

    // Internal: trusted amplitudes, skips the norm gate.
    struct Trusted {};
    PureState(Trusted, int num_qubits, std::vector<Complex> amplitudes)
        : num_qubits_(num_qubits), amps_(std::move(amplitudes)) {}

    int num_qubits_;
    std::vector<Complex> amps_;
};

enum class GateKind { H, X, Z, CNOT, CZ, CCNOT, CCZ, SWAP, CSWAP };

int gate_arity(GateKind kind);
std::string_view gate_name(GateKind kind);
std::optional<GateKind> gate_kind_from_name(std::string_view name);

/// A gate and the qubits it acts on, controls first, targets last.
struct GateSpec {
    GateKind kind;
    std::vector<int> qubits;
};

struct Circuit {
    int num_qubits = 0;
    std::vector<GateSpec> gates;
};

/// |0...0⟩ on n qubits. n = 0 gives the scalar state (single amplitude 1).
PureState zero_state(int num_qubits, int max_qubits = kDefaultMaxQubits);

/// Basis state |index⟩ on n qubits.
PureState basis_state(int num_qubits, std::uint64_t index,
                      int max_qubits = kDefaultMaxQubits);

/// Applies one gate by index arithmetic on the dense vector; no 2^n x 2^n
/// matrices are ever built here.
PureState apply_gate(const PureState& state, const GateSpec& gate);

PureState apply_circuit(PureState state, const Circuit& circuit);

/// Kronecker product with `a` occupying the most significant bits.
PureState tensor_product(const PureState& a, const PureState& b,
                         int max_qubits = kDefaultMaxQubits);

/// ⟨a|b⟩ = Σ_k conj(a_k) b_k.
Complex inner_product(const PureState& a, const PureState& b);

/// |⟨a|b⟩|².
double overlap_sq(const PureState& a, const PureState& b);

/// Marginal distribution over the listed qubits. Keys are bitstrings in the
/// order the indices were given; entries with probability < 1e-15 are
/// dropped.
std::map<std::string, double> outcome_distribution(const PureState& state,
                                                   const std::vector<int>& qubit_indices);

/// Projective measurement of the listed qubits. Returns the sampled
/// bitstring and the renormalized collapsed state.
std::pair<std::string, PureState> measure(const PureState& state,
                                          const std::vector<int>& qubit_indices,
                                          RandomStream& rng);

/// Dense unitary of a circuit (column k = circuit applied to |k⟩).
/// Capped at kMaxUnitaryQubits.
Eigen::MatrixXcd circuit_unitary(const Circuit& circuit);

/// Max-entry deviation |U - θV| after aligning the global phase θ on the
/// first entry of V with modulus above anchor_tol.
double phase_aligned_deviation(const Eigen::MatrixXcd& U, const Eigen::MatrixXcd& V,
                               double anchor_tol);

/// True iff U = θV entrywise within tol for some unit-modulus θ.
bool unitary_equiv_global_phase(const Eigen::MatrixXcd& U, const Eigen::MatrixXcd& V,
                                double tol = 1e-9);

} // namespace swaptest::qubit

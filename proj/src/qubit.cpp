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

#include "swaptest/qubit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace swaptest::qubit {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;
constexpr double kNormTolerance = 1e-9;
constexpr double kDistributionPrune = 1e-15;

void check_register_width(int num_qubits, int max_qubits) {
    if (num_qubits < 0) {
        throw ValidationError("qubit count must be non-negative");
    }
    if (num_qubits > max_qubits) {
        throw CapacityError("register of " + std::to_string(num_qubits) +
                            " qubits exceeds the cap of " + std::to_string(max_qubits));
    }
}

void check_indices(const PureState& state, const std::vector<int>& qubits) {
    for (std::size_t i = 0; i < qubits.size(); ++i) {
        if (qubits[i] < 0 || qubits[i] >= state.num_qubits()) {
            throw ValidationError("qubit index " + std::to_string(qubits[i]) +
                                  " out of range for " + std::to_string(state.num_qubits()) +
                                  " qubits");
        }
        for (std::size_t j = i + 1; j < qubits.size(); ++j) {
            if (qubits[i] == qubits[j]) {
                throw ValidationError("qubit indices must be distinct");
            }
        }
    }
}

inline void butterfly(std::vector<Complex>& a, std::uint64_t i0, std::uint64_t i1) {
    const Complex lo = a[i0];
    const Complex hi = a[i1];
    a[i0] = (lo + hi) * kInvSqrt2;
    a[i1] = (lo - hi) * kInvSqrt2;
}

} // namespace

PureState::PureState(int num_qubits, std::vector<Complex> amplitudes)
    : num_qubits_(num_qubits), amps_(std::move(amplitudes)) {
    check_register_width(num_qubits_, kDefaultMaxQubits);
    if (amps_.size() != (std::uint64_t{1} << num_qubits_)) {
        throw ValidationError("amplitude vector must have length 2^num_qubits");
    }
    double n2 = 0.0;
    for (const auto& a : amps_) n2 += std::norm(a);
    if (std::abs(n2 - 1.0) > kNormTolerance) {
        throw ValidationError("amplitudes are not normalized (squared norm " +
                              std::to_string(n2) + ")");
    }
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& a : amps_) a *= inv;
}

double PureState::norm_sq() const {
    double n2 = 0.0;
    for (const auto& a : amps_) n2 += std::norm(a);
    return n2;
}

int gate_arity(GateKind kind) {
    switch (kind) {
        case GateKind::H:
        case GateKind::X:
        case GateKind::Z:
            return 1;
        case GateKind::CNOT:
        case GateKind::CZ:
        case GateKind::SWAP:
            return 2;
        case GateKind::CCNOT:
        case GateKind::CCZ:
        case GateKind::CSWAP:
            return 3;
    }
    throw ValidationError("unknown gate kind");
}

std::string_view gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::H: return "H";
        case GateKind::X: return "X";
        case GateKind::Z: return "Z";
        case GateKind::CNOT: return "CNOT";
        case GateKind::CZ: return "CZ";
        case GateKind::CCNOT: return "CCNOT";
        case GateKind::CCZ: return "CCZ";
        case GateKind::SWAP: return "SWAP";
        case GateKind::CSWAP: return "CSWAP";
    }
    return "?";
}

std::optional<GateKind> gate_kind_from_name(std::string_view name) {
    static const std::pair<std::string_view, GateKind> table[] = {
        {"H", GateKind::H},         {"X", GateKind::X},
        {"Z", GateKind::Z},         {"CNOT", GateKind::CNOT},
        {"CZ", GateKind::CZ},       {"CCNOT", GateKind::CCNOT},
        {"CCZ", GateKind::CCZ},     {"SWAP", GateKind::SWAP},
        {"CSWAP", GateKind::CSWAP},
    };
    for (const auto& [n, k] : table) {
        if (n == name) return k;
    }
    return std::nullopt;
}

PureState zero_state(int num_qubits, int max_qubits) {
    return basis_state(num_qubits, 0, max_qubits);
}

PureState basis_state(int num_qubits, std::uint64_t index, int max_qubits) {
    check_register_width(num_qubits, max_qubits);
    std::vector<Complex> amps(std::uint64_t{1} << num_qubits, Complex(0.0, 0.0));
    if (index >= amps.size()) {
        throw ValidationError("basis index out of range");
    }
    amps[index] = Complex(1.0, 0.0);
    return PureState(num_qubits, std::move(amps));
}

PureState apply_gate(const PureState& state, const GateSpec& gate) {
    if (static_cast<int>(gate.qubits.size()) != gate_arity(gate.kind)) {
        throw ValidationError(std::string("gate ") + std::string(gate_name(gate.kind)) +
                              " expects " + std::to_string(gate_arity(gate.kind)) +
                              " qubit indices");
    }
    check_indices(state, gate.qubits);

    std::vector<Complex> a = state.amplitudes();
    const std::uint64_t dim = a.size();
    auto mask = [&](int slot) { return state.qubit_mask(gate.qubits[slot]); };

    switch (gate.kind) {
        case GateKind::H: {
            const std::uint64_t b = mask(0);
            for (std::uint64_t i = 0; i < dim; ++i) {
                if (!(i & b)) butterfly(a, i, i | b);
            }
            break;
        }
        case GateKind::X: {
            const std::uint64_t b = mask(0);
            for (std::uint64_t i = 0; i < dim; ++i) {
                if (!(i & b)) std::swap(a[i], a[i | b]);
            }
            break;
        }
        case GateKind::Z: {
            const std::uint64_t b = mask(0);
            for (std::uint64_t i = 0; i < dim; ++i) {
                if (i & b) a[i] = -a[i];
            }
            break;
        }
        case GateKind::CNOT: {
            const std::uint64_t c = mask(0), t = mask(1);
            for (std::uint64_t i = 0; i < dim; ++i) {
                if ((i & c) && !(i & t)) std::swap(a[i], a[i | t]);
            }
            break;
        }
        case GateKind::CZ: {
            const std::uint64_t c = mask(0), t = mask(1);
            for (std::uint64_t i = 0; i < dim; ++i) {
                if ((i & c) && (i & t)) a[i] = -a[i];
            }
            break;
        }
        case GateKind::CCNOT: {
            const std::uint64_t c1 = mask(0), c2 = mask(1), t = mask(2);
            for (std::uint64_t i = 0; i < dim; ++i) {
                if ((i & c1) && (i & c2) && !(i & t)) std::swap(a[i], a[i | t]);
            }
            break;
        }
        case GateKind::CCZ: {
            const std::uint64_t c1 = mask(0), c2 = mask(1), t = mask(2);
            for (std::uint64_t i = 0; i < dim; ++i) {
                if ((i & c1) && (i & c2) && (i & t)) a[i] = -a[i];
            }
            break;
        }
        case GateKind::SWAP: {
            const std::uint64_t p = mask(0), q = mask(1);
            for (std::uint64_t i = 0; i < dim; ++i) {
                if ((i & p) && !(i & q)) std::swap(a[i], a[(i & ~p) | q]);
            }
            break;
        }
        case GateKind::CSWAP: {
            const std::uint64_t c = mask(0), p = mask(1), q = mask(2);
            for (std::uint64_t i = 0; i < dim; ++i) {
                if ((i & c) && (i & p) && !(i & q)) std::swap(a[i], (a[(i & ~p) | q]));
            }
            break;
        }
    }
    return PureState(PureState::Trusted{}, state.num_qubits(), std::move(a));
}

PureState apply_circuit(PureState state, const Circuit& circuit) {
    if (circuit.num_qubits != state.num_qubits()) {
        throw ValidationError("circuit width does not match state width");
    }
    for (const auto& gate : circuit.gates) {
        state = apply_gate(state, gate);
    }
    return state;
}

PureState tensor_product(const PureState& a, const PureState& b, int max_qubits) {
    const int n = a.num_qubits() + b.num_qubits();
    check_register_width(n, max_qubits);
    std::vector<Complex> amps(std::uint64_t{1} << n);
    const std::uint64_t db = b.dim();
    for (std::uint64_t ia = 0; ia < a.dim(); ++ia) {
        for (std::uint64_t ib = 0; ib < db; ++ib) {
            amps[ia * db + ib] = a[ia] * b[ib];
        }
    }
    return PureState(n, std::move(amps));
}

Complex inner_product(const PureState& a, const PureState& b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw ValidationError("inner product requires equal qubit counts");
    }
    Complex acc(0.0, 0.0);
    for (std::uint64_t k = 0; k < a.dim(); ++k) {
        acc += std::conj(a[k]) * b[k];
    }
    return acc;
}

double overlap_sq(const PureState& a, const PureState& b) {
    return std::norm(inner_product(a, b));
}

namespace {

// Probability of each bit pattern over the listed qubits, indexed by the
// pattern read in the order the indices were given.
std::vector<double> marginal_probabilities(const PureState& state,
                                           const std::vector<int>& qubits) {
    check_indices(state, qubits);
    const std::size_t k = qubits.size();
    std::vector<std::uint64_t> masks(k);
    for (std::size_t j = 0; j < k; ++j) masks[j] = state.qubit_mask(qubits[j]);
    std::vector<double> probs(std::size_t{1} << k, 0.0);
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        std::size_t key = 0;
        for (std::size_t j = 0; j < k; ++j) {
            key = (key << 1) | ((i & masks[j]) ? 1u : 0u);
        }
        probs[key] += std::norm(state[i]);
    }
    return probs;
}

std::string key_to_bits(std::size_t key, std::size_t width) {
    std::string s(width, '0');
    for (std::size_t j = 0; j < width; ++j) {
        if (key & (std::size_t{1} << (width - 1 - j))) s[j] = '1';
    }
    return s;
}

} // namespace

std::map<std::string, double> outcome_distribution(const PureState& state,
                                                   const std::vector<int>& qubit_indices) {
    const auto probs = marginal_probabilities(state, qubit_indices);
    std::map<std::string, double> dist;
    for (std::size_t key = 0; key < probs.size(); ++key) {
        if (probs[key] > kDistributionPrune) {
            dist[key_to_bits(key, qubit_indices.size())] = probs[key];
        }
    }
    return dist;
}

std::pair<std::string, PureState> measure(const PureState& state,
                                          const std::vector<int>& qubit_indices,
                                          RandomStream& rng) {
    const auto probs = marginal_probabilities(state, qubit_indices);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double u = unit(rng);
    double acc = 0.0;
    std::size_t picked = probs.size() - 1;
    for (std::size_t key = 0; key < probs.size(); ++key) {
        acc += probs[key];
        if (u < acc) {
            picked = key;
            break;
        }
    }
    // Walk backward over zero-probability tails (possible when u rounds to
    // the top of the accumulated range).
    while (probs[picked] <= 0.0 && picked > 0) --picked;

    const std::size_t k = qubit_indices.size();
    std::vector<std::uint64_t> masks(k);
    for (std::size_t j = 0; j < k; ++j) masks[j] = state.qubit_mask(qubit_indices[j]);

    std::vector<Complex> collapsed(state.dim(), Complex(0.0, 0.0));
    const double inv = 1.0 / std::sqrt(probs[picked]);
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        std::size_t key = 0;
        for (std::size_t j = 0; j < k; ++j) {
            key = (key << 1) | ((i & masks[j]) ? 1u : 0u);
        }
        if (key == picked) collapsed[i] = state[i] * inv;
    }
    return {key_to_bits(picked, k),
            PureState(PureState::Trusted{}, state.num_qubits(), std::move(collapsed))};
}

Eigen::MatrixXcd circuit_unitary(const Circuit& circuit) {
    if (circuit.num_qubits < 0 || circuit.num_qubits > kMaxUnitaryQubits) {
        throw CapacityError("circuit_unitary is capped at " +
                            std::to_string(kMaxUnitaryQubits) + " qubits");
    }
    const std::uint64_t dim = std::uint64_t{1} << circuit.num_qubits;
    Eigen::MatrixXcd u(dim, dim);
    for (std::uint64_t col = 0; col < dim; ++col) {
        PureState out = apply_circuit(basis_state(circuit.num_qubits, col), circuit);
        for (std::uint64_t row = 0; row < dim; ++row) {
            u(row, col) = out[row];
        }
    }
    return u;
}

double phase_aligned_deviation(const Eigen::MatrixXcd& U, const Eigen::MatrixXcd& V,
                               double anchor_tol) {
    if (U.rows() != V.rows() || U.cols() != V.cols() || U.rows() != U.cols()) {
        throw ValidationError("matrices must be square and of equal dimension");
    }
    Complex theta(1.0, 0.0);
    [&] {
        for (Eigen::Index r = 0; r < V.rows(); ++r) {
            for (Eigen::Index c = 0; c < V.cols(); ++c) {
                if (std::abs(V(r, c)) > anchor_tol) {
                    const Complex ratio = U(r, c) * std::conj(V(r, c));
                    if (std::abs(ratio) > 0.0) theta = ratio / std::abs(ratio);
                    return;
                }
            }
        }
    }();
    return (U - theta * V).cwiseAbs().maxCoeff();
}

bool unitary_equiv_global_phase(const Eigen::MatrixXcd& U, const Eigen::MatrixXcd& V,
                                double tol) {
    return phase_aligned_deviation(U, V, tol) <= tol;
}

} // namespace swaptest::qubit

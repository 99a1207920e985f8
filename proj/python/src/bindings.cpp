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

#include <bit>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "swaptest/fingerprint.hpp"
#include "swaptest/fock.hpp"
#include "swaptest/protocols.hpp"
#include "swaptest/qubit.hpp"
#include "swaptest/verify.hpp"

namespace py = pybind11;
using namespace swaptest;
using namespace pybind11::literals;

namespace {

qubit::PureState state_from_amplitudes(const std::vector<Complex>& amps) {
    if (amps.empty() || !std::has_single_bit(amps.size())) {
        throw ValidationError("amplitude vectors must have power-of-two length");
    }
    return qubit::PureState(std::countr_zero(amps.size()), amps);
}

qubit::GateSpec gate_spec(const std::string& kind, const std::vector<int>& qubits) {
    const auto parsed = qubit::gate_kind_from_name(kind);
    if (!parsed) {
        throw ValidationError("unknown gate kind '" + kind + "'");
    }
    return qubit::GateSpec{*parsed, qubits};
}

std::string verdict_name(protocols::Verdict v) {
    return v == protocols::Verdict::Pass ? "Pass" : "Fail";
}

fingerprint::CompareBackend backend_from_name(const std::string& name) {
    if (name == "circuit") return fingerprint::CompareBackend::Circuit;
    if (name == "optical") return fingerprint::CompareBackend::Optical;
    throw ValidationError("backend must be 'circuit' or 'optical'");
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact simulators and protocols for comparing quantum states: SWAP tests, "
              "Hong-Ou-Mandel interference, and single-photon fingerprinting.";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);
    py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);

    py::class_<qubit::PureState>(m, "PureState")
        .def(py::init(&state_from_amplitudes), "amplitudes"_a,
             "Build a state from 2^n complex amplitudes (qubit 0 is the most "
             "significant bit of the basis index).")
        .def_property_readonly("num_qubits", &qubit::PureState::num_qubits)
        .def_property_readonly("amplitudes",
                               [](const qubit::PureState& s) { return s.amplitudes(); })
        .def("__len__", [](const qubit::PureState& s) { return s.dim(); })
        .def("__repr__", [](const qubit::PureState& s) {
            return "<PureState of " + std::to_string(s.num_qubits()) + " qubit(s)>";
        });

    m.def("zero_state", &qubit::zero_state, "num_qubits"_a,
          "max_qubits"_a = qubit::kDefaultMaxQubits);
    m.def(
        "apply_gate",
        [](const qubit::PureState& s, const std::string& kind, const std::vector<int>& q) {
            return qubit::apply_gate(s, gate_spec(kind, q));
        },
        "state"_a, "kind"_a, "qubits"_a,
        "Apply one of H, X, Z, CNOT, CZ, CCNOT, CCZ, SWAP, CSWAP.");
    m.def("tensor_product",
          [](const qubit::PureState& a, const qubit::PureState& b) {
              return qubit::tensor_product(a, b);
          },
          "a"_a, "b"_a);
    m.def("inner_product", &qubit::inner_product, "a"_a, "b"_a);
    m.def("overlap_sq", &qubit::overlap_sq, "a"_a, "b"_a);
    m.def("outcome_distribution", &qubit::outcome_distribution, "state"_a, "qubits"_a);
    m.def(
        "measure",
        [](const qubit::PureState& s, const std::vector<int>& qubits, std::uint64_t seed) {
            RandomStream rng(seed);
            return qubit::measure(s, qubits, rng);
        },
        "state"_a, "qubits"_a, "seed"_a = 0,
        "One projective measurement; returns (bits, collapsed_state).");
    m.def(
        "circuit_unitary",
        [](int num_qubits, const std::vector<std::pair<std::string, std::vector<int>>>& gates) {
            qubit::Circuit circuit{num_qubits, {}};
            for (const auto& [kind, qubits] : gates) {
                circuit.gates.push_back(gate_spec(kind, qubits));
            }
            return qubit::circuit_unitary(circuit);
        },
        "num_qubits"_a, "gates"_a,
        "Dense unitary of a gate list [(kind, qubits), ...] as a numpy array.");
    m.def("unitary_equiv_global_phase", &qubit::unitary_equiv_global_phase, "u"_a, "v"_a,
          "tol"_a = 1e-9);

    py::class_<protocols::PassStats>(m, "PassStats")
        .def_readonly("p_pass", &protocols::PassStats::p_pass)
        .def_readonly("p_fail", &protocols::PassStats::p_fail)
        .def_readonly("overlap_sq", &protocols::PassStats::overlap_sq)
        .def_readonly("outcome_distribution", &protocols::PassStats::outcome_distribution)
        .def("__repr__", [](const protocols::PassStats& s) {
            return "<PassStats p_pass=" + std::to_string(s.p_pass) + ">";
        });

    py::class_<fock::DetectorStats>(m, "DetectorStats")
        .def_readonly("p_upper_only", &fock::DetectorStats::p_upper_only)
        .def_readonly("p_lower_only", &fock::DetectorStats::p_lower_only)
        .def_readonly("p_coincidence", &fock::DetectorStats::p_coincidence)
        .def_readonly("p_none", &fock::DetectorStats::p_none);

    py::class_<protocols::OpticalChainStats>(m, "OpticalChainStats")
        .def_readonly("stats", &protocols::OpticalChainStats::stats)
        .def_readonly("p_d3_only", &protocols::OpticalChainStats::p_d3_only)
        .def_readonly("p_d4_only", &protocols::OpticalChainStats::p_d4_only)
        .def_readonly("p_coincidence_d3d4", &protocols::OpticalChainStats::p_coincidence_d3d4)
        .def_readonly("p_none_d3d4", &protocols::OpticalChainStats::p_none_d3d4)
        .def_readonly("p_single_photon_d4", &protocols::OpticalChainStats::p_single_photon_d4);

    m.def("ancilla_swap_test_prob",
          [](const qubit::PureState& phi, const qubit::PureState& psi) {
              return protocols::ancilla_swap_test_prob(phi, psi);
          },
          "phi"_a, "psi"_a);
    m.def("destructive_swap_test", &protocols::destructive_swap_test, "phi"_a, "psi"_a);
    m.def(
        "destructive_swap_test_sample",
        [](const qubit::PureState& phi, const qubit::PureState& psi, std::uint64_t seed) {
            RandomStream rng(seed);
            const auto outcome = protocols::destructive_swap_test_sample(phi, psi, rng);
            return py::make_tuple(verdict_name(outcome.verdict), outcome.raw_bits);
        },
        "phi"_a, "psi"_a, "seed"_a = 0, "Returns (verdict, raw_bits).");
    m.def(
        "nand_verdict",
        [](const std::string& o1, const std::string& o2) {
            return verdict_name(protocols::nand_verdict(o1, o2));
        },
        "o1"_a, "o2"_a);
    m.def("repeated_pass_prob", &protocols::repeated_pass_prob, "overlap_sq"_a, "rounds"_a);
    m.def("hom_swap_test", &protocols::hom_swap_test, "phi_amps"_a, "psi_amps"_a,
          "Returns (DetectorStats, PassStats).");
    m.def("optical_swap_test_with_ancilla", &protocols::optical_swap_test_with_ancilla,
          "phi_amps"_a, "psi_amps"_a);
    m.def("wavepacket_coincidence",
          [](const std::vector<Complex>& xi1, const std::vector<Complex>& xi2, double dt) {
              return fock::wavepacket_coincidence(xi1, xi2, dt);
          },
          "xi1"_a, "xi2"_a, "dt"_a);

    py::class_<fingerprint::Code>(m, "Code")
        .def_readonly("n_bits", &fingerprint::Code::n_bits)
        .def_readonly("m", &fingerprint::Code::m)
        .def_readonly("delta", &fingerprint::Code::delta)
        .def_readonly("generator", &fingerprint::Code::generator)
        .def("__repr__", [](const fingerprint::Code& c) {
            return "<Code [" + std::to_string(c.m) + "," + std::to_string(c.n_bits) +
                   "] delta=" + std::to_string(c.delta) + ">";
        });

    m.def("simplex_code", &fingerprint::simplex_code, "k"_a);
    m.def("make_code", &fingerprint::make_code, "generator"_a);
    m.def("code_delta", &fingerprint::code_delta, "code"_a);
    m.def("generator_delta", &fingerprint::generator_delta, "generator"_a);
    m.def("encode", &fingerprint::encode, "code"_a, "x"_a);
    m.def(
        "fingerprint_state",
        [](const fingerprint::Code& code, const std::string& x) {
            return fingerprint::fingerprint_state(code, x).amplitudes;
        },
        "code"_a, "x"_a, "Fingerprint amplitudes (+-1/sqrt(m)).");
    m.def("fingerprint_overlap", &fingerprint::fingerprint_overlap, "code"_a, "x"_a, "y"_a);
    m.def(
        "compare_strings",
        [](const fingerprint::Code& code, const std::string& x, const std::string& y,
           int rounds, const std::string& backend, std::uint64_t seed) {
            RandomStream rng(seed);
            const auto result = fingerprint::compare_strings(code, x, y, rounds,
                                                             backend_from_name(backend), rng);
            return py::make_tuple(result.verdict == fingerprint::CompareVerdict::Equal
                                      ? "Equal"
                                      : "Different",
                                  result.rounds_used, result.fail_round);
        },
        "code"_a, "x"_a, "y"_a, "rounds"_a, "backend"_a = "circuit", "seed"_a = 0,
        "Returns (verdict, rounds_used, fail_round); fail_round is -1 when Equal.");
    m.def("false_equal_bound", &fingerprint::false_equal_bound, "delta"_a, "rounds"_a);

    py::class_<verify::IdentityReport>(m, "IdentityReport")
        .def_readonly("identity_name", &verify::IdentityReport::identity_name)
        .def_readonly("max_deviation", &verify::IdentityReport::max_deviation)
        .def_readonly("passed", &verify::IdentityReport::passed)
        .def_readonly("tolerance", &verify::IdentityReport::tolerance)
        .def("__repr__", [](const verify::IdentityReport& r) {
            return "<IdentityReport '" + r.identity_name + "' " +
                   (r.passed ? "passed" : "FAILED") + ">";
        });

    py::class_<verify::AgreementRow>(m, "AgreementRow")
        .def_readonly("d", &verify::AgreementRow::d)
        .def_readonly("overlap_sq", &verify::AgreementRow::overlap_sq)
        .def_readonly("analytic", &verify::AgreementRow::analytic)
        .def_readonly("ancilla", &verify::AgreementRow::ancilla)
        .def_readonly("destructive", &verify::AgreementRow::destructive)
        .def_readonly("hom", &verify::AgreementRow::hom)
        .def_readonly("optical", &verify::AgreementRow::optical);

    py::class_<verify::AgreementReport>(m, "AgreementReport")
        .def_readonly("trials_per_dim", &verify::AgreementReport::trials_per_dim)
        .def_readonly("dims_tested", &verify::AgreementReport::dims_tested)
        .def_readonly("max_abs_error", &verify::AgreementReport::max_abs_error)
        .def_readonly("seed", &verify::AgreementReport::seed)
        .def_readonly("rows", &verify::AgreementReport::rows);

    m.def("check_circuit_identities", &verify::check_circuit_identities, "tol"_a = 1e-10);
    m.def(
        "check_deferred_measurement",
        [](int trials, std::uint64_t seed, double tol) {
            RandomStream rng(seed);
            return verify::check_deferred_measurement(trials, rng, tol);
        },
        "trials"_a = 100, "seed"_a = 0, "tol"_a = 1e-10);
    m.def("cross_backend_agreement", &verify::cross_backend_agreement, "dims"_a,
          "trials_per_dim"_a, "seed"_a = 0);
}

# Copyright 2026 The swaptest authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Exact state-comparison toolkit: SWAP tests, Hong-Ou-Mandel interference,
and single-photon fingerprinting, all backed by exact simulators."""

from ._core import (
    AgreementReport,
    AgreementRow,
    CapacityError,
    Code,
    DetectorStats,
    IdentityReport,
    OpticalChainStats,
    PassStats,
    PureState,
    ValidationError,
    ancilla_swap_test_prob,
    apply_gate,
    check_circuit_identities,
    check_deferred_measurement,
    circuit_unitary,
    code_delta,
    compare_strings,
    cross_backend_agreement,
    destructive_swap_test,
    destructive_swap_test_sample,
    encode,
    false_equal_bound,
    fingerprint_overlap,
    fingerprint_state,
    generator_delta,
    hom_swap_test,
    inner_product,
    make_code,
    measure,
    nand_verdict,
    optical_swap_test_with_ancilla,
    outcome_distribution,
    overlap_sq,
    repeated_pass_prob,
    simplex_code,
    tensor_product,
    unitary_equiv_global_phase,
    wavepacket_coincidence,
    zero_state,
)

__version__ = "0.1.0"

__all__ = [
    "AgreementReport",
    "AgreementRow",
    "CapacityError",
    "Code",
    "DetectorStats",
    "IdentityReport",
    "OpticalChainStats",
    "PassStats",
    "PureState",
    "ValidationError",
    "ancilla_swap_test_prob",
    "apply_gate",
    "check_circuit_identities",
    "check_deferred_measurement",
    "circuit_unitary",
    "code_delta",
    "compare_strings",
    "cross_backend_agreement",
    "destructive_swap_test",
    "destructive_swap_test_sample",
    "encode",
    "false_equal_bound",
    "fingerprint_overlap",
    "fingerprint_state",
    "generator_delta",
    "hom_swap_test",
    "inner_product",
    "make_code",
    "measure",
    "nand_verdict",
    "optical_swap_test_with_ancilla",
    "outcome_distribution",
    "overlap_sq",
    "repeated_pass_prob",
    "simplex_code",
    "tensor_product",
    "unitary_equiv_global_phase",
    "wavepacket_coincidence",
    "zero_state",
]

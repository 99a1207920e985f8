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
#include <cmath>

#include <catch2/catch_amalgamated.hpp>

#include "swaptest/protocols.hpp"
#include "test_helpers.hpp"

using namespace swaptest;
using namespace swaptest::protocols;
using qubit::PureState;
using test_helpers::max_term_deviation;
using test_helpers::random_state;
using Catch::Approx;

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

PureState ket0() { return qubit::zero_state(1); }
PureState ket1() { return qubit::basis_state(1, 1); }
PureState ket_plus() {
    return PureState(1, {Complex(kInvSqrt2, 0), Complex(kInvSqrt2, 0)});
}

// Brute-force oracle for the ancilla test on single qubits: builds the
// 8-amplitude vector by hand with explicit Kronecker products, never
// touching the simulator's gate kernels.
double ancilla_pass_oracle(const PureState& phi, const PureState& psi) {
    std::vector<Complex> v(8, Complex(0, 0));
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) v[a * 2 + b] = phi[a] * psi[b]; // ancilla |0>
    auto h_on_ancilla = [&]() {
        std::vector<Complex> w(8);
        for (int t = 0; t < 4; ++t) {
            w[t] = (v[t] + v[4 + t]) * kInvSqrt2;
            w[4 + t] = (v[t] - v[4 + t]) * kInvSqrt2;
        }
        v = w;
    };
    h_on_ancilla();
    // CSWAP: in the ancilla=1 half, swap the two test qubits.
    std::swap(v[4 + 0b01], v[4 + 0b10]);
    h_on_ancilla();
    return std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]) + std::norm(v[3]);
}

// Paper formula for the single-qubit destructive test.
double single_qubit_pass_formula(const PureState& phi, const PureState& psi) {
    const Complex alpha = phi[0], beta = phi[1], gamma = psi[0], delta = psi[1];
    const Complex cross = alpha * std::conj(beta) * std::conj(gamma) * delta;
    return (1.0 + std::norm(alpha) * std::norm(gamma) + std::norm(beta) * std::norm(delta) +
            2.0 * cross.real()) /
           2.0;
}

} // namespace

TEST_CASE("ancilla_swap_test_prob") {
    RandomStream rng(101);
    SECTION("equal states always pass") {
        for (int n : {1, 2, 3}) {
            const auto phi = random_state(n, rng);
            const auto stats = ancilla_swap_test_prob(phi, phi);
            REQUIRE(stats.p_pass == Approx(1.0).margin(1e-12));
            REQUIRE(stats.p_pass + stats.p_fail == Approx(1.0).margin(1e-12));
        }
    }
    SECTION("orthogonal states pass half of the time") {
        const auto stats = ancilla_swap_test_prob(ket0(), ket1());
        REQUIRE(stats.p_pass == Approx(0.5).margin(1e-12));
        REQUIRE(stats.overlap_sq == Approx(0.0).margin(1e-15));
        REQUIRE(stats.outcome_distribution.at("0") == Approx(0.5).margin(1e-12));
    }
    SECTION("|0> against |+>") {
        const auto stats = ancilla_swap_test_prob(ket0(), ket_plus());
        REQUIRE(stats.p_pass == Approx(0.75).margin(1e-12));
        REQUIRE(stats.overlap_sq == Approx(0.5).margin(1e-12));
        REQUIRE(ancilla_pass_oracle(ket0(), ket_plus()) == Approx(0.75).margin(1e-12));
    }
    SECTION("matches the brute-force vector oracle") {
        for (int t = 0; t < 25; ++t) {
            const auto phi = random_state(1, rng);
            const auto psi = random_state(1, rng);
            REQUIRE(ancilla_swap_test_prob(phi, psi).p_pass ==
                    Approx(ancilla_pass_oracle(phi, psi)).margin(1e-12));
        }
    }
    SECTION("stats follow the analytic law") {
        for (int n : {1, 2}) {
            const auto phi = random_state(n, rng);
            const auto psi = random_state(n, rng);
            const auto stats = ancilla_swap_test_prob(phi, psi);
            REQUIRE(stats.p_pass ==
                    Approx((1.0 + stats.overlap_sq) / 2.0).margin(1e-10));
        }
    }
    SECTION("errors") {
        REQUIRE_THROWS_AS(ancilla_swap_test_prob(ket0(), qubit::zero_state(2)),
                          ValidationError);
        REQUIRE_THROWS_AS(
            ancilla_swap_test_prob(qubit::zero_state(10), qubit::zero_state(10)),
            CapacityError);
    }
}

TEST_CASE("destructive_swap_test") {
    RandomStream rng(202);
    SECTION("identical basis states never fail") {
        const auto stats = destructive_swap_test(ket0(), ket0());
        REQUIRE(stats.p_fail == Approx(0.0).margin(1e-15));
    }
    SECTION("|0> against |1>") {
        const auto stats = destructive_swap_test(ket0(), ket1());
        REQUIRE(stats.p_fail == Approx(0.5).margin(1e-12));
        // The failing record is the all-ones one; hand expansion puts
        // half the probability there and half on "10".
        REQUIRE(stats.outcome_distribution.at("11") == Approx(0.5).margin(1e-12));
        REQUIRE(stats.outcome_distribution.at("10") == Approx(0.5).margin(1e-12));
    }
    SECTION("random single qubits match the closed formula") {
        for (int t = 0; t < 50; ++t) {
            const auto phi = random_state(1, rng);
            const auto psi = random_state(1, rng);
            REQUIRE(destructive_swap_test(phi, psi).p_pass ==
                    Approx(single_qubit_pass_formula(phi, psi)).margin(1e-10));
        }
    }
    SECTION("agrees with the ancilla route on multi-qubit registers") {
        for (int n : {2, 3}) {
            const auto phi = random_state(n, rng);
            const auto psi = random_state(n, rng);
            REQUIRE(destructive_swap_test(phi, psi).p_pass ==
                    Approx(ancilla_swap_test_prob(phi, psi).p_pass).margin(1e-10));
        }
    }
    SECTION("fail probability follows the analytic law") {
        const auto phi = random_state(2, rng);
        const auto psi = random_state(2, rng);
        const auto stats = destructive_swap_test(phi, psi);
        REQUIRE(stats.p_fail ==
                Approx((1.0 - stats.overlap_sq) / 2.0).margin(1e-10));
    }
    SECTION("errors") {
        REQUIRE_THROWS_AS(destructive_swap_test(ket0(), qubit::zero_state(2)),
                          ValidationError);
        REQUIRE_THROWS_AS(destructive_swap_test(qubit::zero_state(0), qubit::zero_state(0)),
                          ValidationError);
    }
}

TEST_CASE("destructive_swap_test_sample") {
    SECTION("equal states always pass") {
        RandomStream rng(7);
        const auto phi = ket_plus();
        for (int s = 0; s < 500; ++s) {
            REQUIRE(destructive_swap_test_sample(phi, phi, rng).verdict == Verdict::Pass);
        }
    }
    SECTION("orthogonal states fail half of the time") {
        RandomStream rng(8);
        const long shots = 100000;
        long fails = 0;
        for (long s = 0; s < shots; ++s) {
            if (destructive_swap_test_sample(ket0(), ket1(), rng).verdict == Verdict::Fail)
                ++fails;
        }
        const double freq = double(fails) / shots;
        REQUIRE(std::abs(freq - 0.5) < 3.0 * std::sqrt(0.25 / shots));
    }
    SECTION("fixed seed reproduces the record sequence") {
        RandomStream a(9), b(9);
        for (int s = 0; s < 200; ++s) {
            REQUIRE(destructive_swap_test_sample(ket0(), ket_plus(), a).raw_bits ==
                    destructive_swap_test_sample(ket0(), ket_plus(), b).raw_bits);
        }
    }
}

TEST_CASE("nand_verdict") {
    REQUIRE(nand_verdict("1", "1") == Verdict::Fail);
    REQUIRE(nand_verdict("1", "0") == Verdict::Pass);
    REQUIRE(nand_verdict("110", "011") == Verdict::Fail); // AND = 010, odd parity
    REQUIRE(nand_verdict("111", "110") == Verdict::Pass); // AND = 110, even parity
    REQUIRE_THROWS_AS(nand_verdict("10", "1"), ValidationError);
}

TEST_CASE("repeated_pass_prob") {
    REQUIRE(repeated_pass_prob(0.0, 3) == Approx(0.125).margin(1e-15));
    REQUIRE(repeated_pass_prob(1.0, 17) == Approx(1.0).margin(1e-15));
    REQUIRE(repeated_pass_prob(0.3, 0) == 1.0);
    SECTION("near-equal states, ten rounds") {
        // 0.995^10, frozen from an independent exp/log evaluation. The
        // second-order term keeps it 1.11e-3 above the first-order value
        // 0.95.
        const double p = repeated_pass_prob(1.0 - 0.01, 10);
        REQUIRE(p == Approx(std::exp(10.0 * std::log1p(-0.005))).margin(1e-14));
        REQUIRE(p == Approx(0.95111013046577189).margin(1e-12));
    }
    SECTION("errors") {
        REQUIRE_THROWS_AS(repeated_pass_prob(-0.1, 2), ValidationError);
        REQUIRE_THROWS_AS(repeated_pass_prob(1.1, 2), ValidationError);
        REQUIRE_THROWS_AS(repeated_pass_prob(0.5, -1), ValidationError);
    }
}

TEST_CASE("hom_swap_test") {
    RandomStream rng(303);
    SECTION("identical photons never coincide") {
        for (int d : {2, 3, 5}) {
            const auto amps = random_unit_amplitudes(d, rng);
            const auto [det, stats] = hom_swap_test(amps, amps);
            REQUIRE(det.p_coincidence <= 1e-12);
            REQUIRE(stats.p_pass == Approx(1.0).margin(1e-12));
        }
    }
    SECTION("orthogonal d=2 photons coincide half of the time") {
        const auto [det, stats] = hom_swap_test({Complex(1, 0), Complex(0, 0)},
                                                {Complex(0, 0), Complex(1, 0)});
        REQUIRE(det.p_coincidence == Approx(0.5).margin(1e-12));
        REQUIRE(stats.p_fail == Approx(0.5).margin(1e-12));
        REQUIRE(stats.outcome_distribution.at("11") == Approx(0.5).margin(1e-12));
    }
    SECTION("random d=4 pairs follow the overlap formula") {
        for (int t = 0; t < 30; ++t) {
            const auto phi = random_unit_amplitudes(4, rng);
            const auto psi = random_unit_amplitudes(4, rng);
            Complex inner(0, 0);
            for (int i = 0; i < 4; ++i) inner += phi[i] * std::conj(psi[i]);
            const auto [det, stats] = hom_swap_test(phi, psi);
            REQUIRE(stats.p_fail ==
                    Approx((1.0 - std::norm(inner)) / 2.0).margin(1e-10));
        }
    }
    SECTION("agrees with the circuit tests for power-of-two d") {
        for (int d : {2, 4, 8}) {
            const auto phi = random_unit_amplitudes(d, rng);
            const auto psi = random_unit_amplitudes(d, rng);
            const int n = std::countr_zero(unsigned(d));
            const auto circuit_stats =
                destructive_swap_test(PureState(n, phi), PureState(n, psi));
            REQUIRE(hom_swap_test(phi, psi).second.p_pass ==
                    Approx(circuit_stats.p_pass).margin(1e-10));
        }
    }
    SECTION("dimension mismatch") {
        REQUIRE_THROWS_AS(hom_swap_test({Complex(1, 0)}, {Complex(1, 0), Complex(0, 0)}),
                          ValidationError);
    }
}

TEST_CASE("optical_cswap") {
    RandomStream rng(404);
    SECTION("control 0 is the identity") {
        const auto phi = random_unit_amplitudes(3, rng);
        const auto psi = random_unit_amplitudes(3, rng);
        const auto in = fock::product(fock::single_photon(phi, "U"),
                                      fock::single_photon(psi, "D"));
        REQUIRE(max_term_deviation(optical_cswap(in, false), in) < 1e-12);
    }
    SECTION("control 1 moves a single photon across") {
        const auto in = fock::single_photon({Complex(1, 0)}, "U");
        const auto out = optical_cswap(in, true);
        fock::OccupationVector moved(
            std::vector<std::pair<fock::Mode, int>>{{fock::Mode{0, "D"}, 1}});
        REQUIRE(std::abs(out.amplitude(moved) - Complex(1, 0)) < 1e-12);
    }
    SECTION("control 1 swaps orthogonal photons") {
        const auto in = fock::product(fock::single_photon({Complex(1, 0), Complex(0, 0)}, "U"),
                                      fock::single_photon({Complex(0, 0), Complex(1, 0)}, "D"));
        const auto swapped = fock::product(
            fock::single_photon({Complex(0, 0), Complex(1, 0)}, "U"),
            fock::single_photon({Complex(1, 0), Complex(0, 0)}, "D"));
        REQUIRE(max_term_deviation(optical_cswap(in, true), swapped) < 1e-12);
    }
    SECTION("identical photons are unchanged up to a global phase") {
        const auto in = fock::product(fock::single_photon({Complex(1, 0)}, "U"),
                                      fock::single_photon({Complex(1, 0)}, "D"));
        const auto out = optical_cswap(in, true);
        // single term in, single term out: compare amplitude magnitudes
        fock::OccupationVector both(std::vector<std::pair<fock::Mode, int>>{
            {fock::Mode{0, "D"}, 1}, {fock::Mode{0, "U"}, 1}});
        REQUIRE(std::abs(std::abs(out.amplitude(both)) - 1.0) < 1e-12);
        REQUIRE(out.terms().size() == 1);
    }
}

TEST_CASE("optical_swap_test_with_ancilla") {
    RandomStream rng(505);
    SECTION("equal states pass with certainty") {
        const auto amps = random_unit_amplitudes(2, rng);
        const auto chain = optical_swap_test_with_ancilla(amps, amps);
        REQUIRE(chain.stats.p_pass == Approx(1.0).margin(1e-12));
    }
    SECTION("orthogonal states pass half of the time") {
        const auto chain = optical_swap_test_with_ancilla({Complex(1, 0), Complex(0, 0)},
                                                          {Complex(0, 0), Complex(1, 0)});
        REQUIRE(chain.stats.p_pass == Approx(0.5).margin(1e-12));
    }
    SECTION("agrees with the ancilla circuit on random d=2 pairs") {
        for (int t = 0; t < 20; ++t) {
            const auto phi = random_unit_amplitudes(2, rng);
            const auto psi = random_unit_amplitudes(2, rng);
            const auto chain = optical_swap_test_with_ancilla(phi, psi);
            const auto circuit = ancilla_swap_test_prob(PureState(1, phi), PureState(1, psi));
            REQUIRE(chain.stats.p_pass == Approx(circuit.p_pass).margin(1e-10));
        }
    }
    SECTION("the lower interferometer reduction") {
        for (int t = 0; t < 20; ++t) {
            const auto phi = random_unit_amplitudes(2, rng);
            const auto psi = random_unit_amplitudes(2, rng);
            const auto chain = optical_swap_test_with_ancilla(phi, psi);
            const auto destructive =
                destructive_swap_test(PureState(1, phi), PureState(1, psi));
            // A lone photon at D4 cannot happen; a D3/D4 coincidence is
            // exactly a failed destructive test.
            REQUIRE(chain.p_single_photon_d4 <= 1e-12);
            REQUIRE(chain.p_coincidence_d3d4 ==
                    Approx(destructive.p_fail).margin(1e-10));
        }
    }
}

TEST_CASE("protocol symmetries and ranges") {
    RandomStream rng(606);
    SECTION("swapping the inputs changes nothing") {
        const auto phi = random_state(1, rng);
        const auto psi = random_state(1, rng);
        REQUIRE(ancilla_swap_test_prob(phi, psi).p_pass ==
                Approx(ancilla_swap_test_prob(psi, phi).p_pass).margin(1e-12));
        REQUIRE(destructive_swap_test(phi, psi).p_pass ==
                Approx(destructive_swap_test(psi, phi).p_pass).margin(1e-12));
        const std::vector<Complex> a = phi.amplitudes();
        const std::vector<Complex> b = psi.amplitudes();
        REQUIRE(hom_swap_test(a, b).second.p_pass ==
                Approx(hom_swap_test(b, a).second.p_pass).margin(1e-12));
        REQUIRE(optical_swap_test_with_ancilla(a, b).stats.p_pass ==
                Approx(optical_swap_test_with_ancilla(b, a).stats.p_pass).margin(1e-12));
    }
    SECTION("pass probability stays in [1/2, 1]") {
        for (int t = 0; t < 40; ++t) {
            const auto phi = random_state(2, rng);
            const auto psi = random_state(2, rng);
            const double p = destructive_swap_test(phi, psi).p_pass;
            REQUIRE(p >= 0.5 - 1e-12);
            REQUIRE(p <= 1.0 + 1e-12);
        }
    }
    SECTION("equivalence of all four routes") {
        for (int d : {2, 4, 8}) {
            for (int t = 0; t < 20; ++t) {
                const auto phi = random_unit_amplitudes(d, rng);
                const auto psi = random_unit_amplitudes(d, rng);
                Complex inner(0, 0);
                for (int i = 0; i < d; ++i) inner += std::conj(psi[i]) * phi[i];
                const double analytic = (1.0 + std::norm(inner)) / 2.0;
                const int n = std::countr_zero(unsigned(d));
                const PureState sp(n, phi), sq(n, psi);
                REQUIRE(ancilla_swap_test_prob(sp, sq).p_pass ==
                        Approx(analytic).margin(1e-10));
                REQUIRE(destructive_swap_test(sp, sq).p_pass ==
                        Approx(analytic).margin(1e-10));
                REQUIRE(hom_swap_test(phi, psi).second.p_pass ==
                        Approx(analytic).margin(1e-10));
                REQUIRE(optical_swap_test_with_ancilla(phi, psi).stats.p_pass ==
                        Approx(analytic).margin(1e-10));
            }
        }
    }
}

TEST_CASE("entangled joint inputs") {
    // (|01> + |10>)/sqrt(2) rotates to |10> and passes with certainty, even
    // though the two qubits never agree. Comparison semantics require a
    // product input; this documents the caveat.
    const PureState joint(2, {Complex(0, 0), Complex(kInvSqrt2, 0), Complex(kInvSqrt2, 0),
                              Complex(0, 0)});
    const auto result = destructive_swap_test_joint(joint);
    REQUIRE(result.p_pass == Approx(1.0).margin(1e-12));
    REQUIRE(result.outcome_distribution.at("10") == Approx(1.0).margin(1e-12));
    REQUIRE(std::abs(result.post_circuit_state[0b10] - Complex(1, 0)) < 1e-12);
    REQUIRE_THROWS_AS(destructive_swap_test_joint(qubit::zero_state(3)), ValidationError);
}

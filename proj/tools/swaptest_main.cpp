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
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "swaptest/fingerprint.hpp"
#include "swaptest/json_io.hpp"
#include "swaptest/protocols.hpp"
#include "swaptest/qubit.hpp"
#include "swaptest/verify.hpp"

namespace {

using namespace swaptest;
using io::json;

std::string read_file(const std::string& path) {
    std::ifstream file(path);
    if (!file) {
        throw ValidationError("cannot open file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
}

// Inline JSON or @path. Vectors are normalized here so users can type
// unscaled amplitudes like [[1,0],[1,0]].
std::vector<Complex> parse_amplitudes(const std::string& arg) {
    const std::string text = (!arg.empty() && arg.front() == '@')
                                 ? read_file(arg.substr(1))
                                 : arg;
    auto amps = io::amplitudes_from_json(json::parse(text));
    double n2 = 0.0;
    for (const auto& a : amps) n2 += std::norm(a);
    if (n2 <= 0.0) {
        throw ValidationError("state amplitudes must not all be zero");
    }
    const double inv = 1.0 / std::sqrt(n2);
    for (auto& a : amps) a *= inv;
    return amps;
}

qubit::PureState parse_qubit_state(const std::string& arg) {
    const auto amps = parse_amplitudes(arg);
    if (!std::has_single_bit(amps.size()) || amps.size() < 2) {
        throw ValidationError("qubit states need a power-of-two number of amplitudes");
    }
    return qubit::PureState(std::countr_zero(amps.size()), amps);
}

void emit(const json& machine, const std::string& human, bool as_json) {
    if (as_json) {
        std::cout << machine.dump(2) << "\n";
    } else {
        std::cout << human;
    }
}

std::string format_pass_stats(const protocols::PassStats& stats) {
    std::ostringstream out;
    out << std::setprecision(12);
    out << "p_pass       = " << stats.p_pass << "\n"
        << "p_fail       = " << stats.p_fail << "\n"
        << "overlap_sq   = " << stats.overlap_sq << "\n"
        << "outcomes:\n";
    for (const auto& [record, p] : stats.outcome_distribution) {
        out << "  " << record << "  " << p << "\n";
    }
    return out.str();
}

int run_swap_test(const std::string& phi_arg, const std::string& psi_arg,
                  const std::string& variant, long shots, std::uint64_t seed,
                  bool as_json) {
    const auto phi = parse_qubit_state(phi_arg);
    const auto psi = parse_qubit_state(psi_arg);
    protocols::PassStats stats;
    if (variant == "ancilla") {
        stats = protocols::ancilla_swap_test_prob(phi, psi);
    } else if (variant == "destructive") {
        stats = protocols::destructive_swap_test(phi, psi);
    } else {
        throw ValidationError("variant must be 'ancilla' or 'destructive'");
    }
    json machine = io::to_json(stats);
    machine["variant"] = variant;
    std::ostringstream human;
    human << "SWAP test (" << variant << " variant)\n" << format_pass_stats(stats);

    if (shots > 0) {
        RandomStream rng(seed);
        long passes = 0;
        if (variant == "ancilla") {
            auto joint = qubit::tensor_product(
                qubit::tensor_product(qubit::zero_state(1), phi), psi);
            joint = qubit::apply_circuit(
                std::move(joint), protocols::ancilla_test_circuit(phi.num_qubits()));
            for (long s = 0; s < shots; ++s) {
                if (qubit::measure(joint, {0}, rng).first == "0") ++passes;
            }
        } else {
            for (long s = 0; s < shots; ++s) {
                if (protocols::destructive_swap_test_sample(phi, psi, rng).verdict ==
                    protocols::Verdict::Pass)
                    ++passes;
            }
        }
        const double freq = double(passes) / double(shots);
        const double err = std::sqrt(freq * (1.0 - freq) / double(shots));
        machine["sampled"] = {{"shots", shots},
                              {"seed", seed},
                              {"pass_frequency", freq},
                              {"fail_frequency", 1.0 - freq},
                              {"std_error", err}};
        human << "sampled " << shots << " shots (seed " << seed
              << "): pass frequency = " << std::setprecision(8) << freq << " +- " << err
              << "\n";
    }
    emit(machine, human.str(), as_json);
    return 0;
}

int run_hom(int d, const std::string& phi_arg, const std::string& psi_arg, bool as_json) {
    const auto phi = parse_amplitudes(phi_arg);
    const auto psi = parse_amplitudes(psi_arg);
    if (d > 0 && (phi.size() != std::size_t(d) || psi.size() != std::size_t(d))) {
        throw ValidationError("--d does not match the supplied amplitude vectors");
    }
    const auto [det, stats] = protocols::hom_swap_test(phi, psi);
    json machine = {{"detectors", io::to_json(det)}, {"stats", io::to_json(stats)}};
    std::ostringstream human;
    human << std::setprecision(12);
    human << "Hong-Ou-Mandel test (d = " << phi.size() << ")\n"
          << "p_upper_only  = " << det.p_upper_only << "\n"
          << "p_lower_only  = " << det.p_lower_only << "\n"
          << "p_coincidence = " << det.p_coincidence << "\n"
          << "p_none        = " << det.p_none << "\n"
          << format_pass_stats(stats);
    emit(machine, human.str(), as_json);
    return 0;
}

int run_optical(const std::string& phi_arg, const std::string& psi_arg, bool with_ancilla,
                bool as_json) {
    const auto phi = parse_amplitudes(phi_arg);
    const auto psi = parse_amplitudes(psi_arg);
    if (!with_ancilla) {
        return run_hom(-1, phi_arg, psi_arg, as_json);
    }
    const auto chain = protocols::optical_swap_test_with_ancilla(phi, psi);
    const json machine = io::to_json(chain);
    std::ostringstream human;
    human << std::setprecision(12);
    human << "Optical SWAP test with ancilla photon\n"
          << format_pass_stats(chain.stats) << "test-side detectors D3/D4:\n"
          << "  p_d3_only          = " << chain.p_d3_only << "\n"
          << "  p_d4_only          = " << chain.p_d4_only << "\n"
          << "  p_coincidence      = " << chain.p_coincidence_d3d4 << "\n"
          << "  p_single_photon_d4 = " << chain.p_single_photon_d4 << "\n";
    emit(machine, human.str(), as_json);
    return 0;
}

int run_fingerprint(int k, const std::string& generator_path, const std::string& x,
                    const std::string& y, int rounds, const std::string& backend_name,
                    std::uint64_t seed, bool as_json) {
    fingerprint::Code code;
    if (!generator_path.empty()) {
        code = fingerprint::make_code(
            fingerprint::parse_generator_text(read_file(generator_path)));
    } else {
        code = fingerprint::simplex_code(k);
    }
    fingerprint::CompareBackend backend;
    if (backend_name == "circuit") {
        backend = fingerprint::CompareBackend::Circuit;
    } else if (backend_name == "optical") {
        backend = fingerprint::CompareBackend::Optical;
    } else {
        throw ValidationError("backend must be 'circuit' or 'optical'");
    }
    RandomStream rng(seed);
    const auto result = fingerprint::compare_strings(code, x, y, rounds, backend, rng);
    json machine = io::comparison_to_json(code, x, y, rounds, result);
    machine["backend"] = backend_name;
    machine["seed"] = seed;
    std::ostringstream human;
    human << "fingerprint comparison ([" << code.m << "," << code.n_bits
          << "] code, delta = " << std::setprecision(12) << code.delta << ")\n"
          << "x = " << x << ", y = " << y << ", backend = " << backend_name << ", rounds = "
          << rounds << "\n"
          << "verdict: "
          << (result.verdict == fingerprint::CompareVerdict::Equal ? "Equal" : "Different");
    if (result.fail_round > 0) {
        human << " (first failure in round " << result.fail_round << ")";
    }
    human << "\nfalse-Equal bound: "
          << fingerprint::false_equal_bound(code.delta, rounds) << "\n";
    emit(machine, human.str(), as_json);
    return 0;
}

int run_verify(const std::vector<int>& dims, int trials, double tol, std::uint64_t seed,
               bool as_json) {
    const auto identities = verify::check_circuit_identities(tol);
    RandomStream rng(seed);
    const auto deferred = verify::check_deferred_measurement(100, rng, tol);
    const auto agreement = verify::cross_backend_agreement(dims, trials, seed);

    bool all_passed = deferred.passed && agreement.max_abs_error < tol;
    for (const auto& r : identities) all_passed = all_passed && r.passed;

    json machine;
    machine["identities"] = json::array();
    for (const auto& r : identities) machine["identities"].push_back(io::to_json(r));
    machine["deferred_measurement"] = io::to_json(deferred);
    machine["agreement"] = io::to_json(agreement);
    machine["passed"] = all_passed;

    std::ostringstream human;
    human << "circuit identities (tol " << tol << "):\n";
    for (const auto& r : identities) {
        human << "  " << (r.passed ? "PASS" : "FAIL") << "  " << r.identity_name
              << "  (max deviation " << std::setprecision(3) << r.max_deviation << ")\n";
    }
    human << "  " << (deferred.passed ? "PASS" : "FAIL") << "  " << deferred.identity_name
          << "  (max deviation " << deferred.max_deviation << ")\n";
    human << "cross-backend agreement: dims [";
    for (std::size_t i = 0; i < dims.size(); ++i) {
        human << dims[i] << (i + 1 < dims.size() ? "," : "");
    }
    human << "], " << trials << " trials/dim, seed " << seed << "\n"
          << "  max |p_pass error| across routes = " << agreement.max_abs_error << "  "
          << (agreement.max_abs_error < tol ? "PASS" : "FAIL") << "\n"
          << "overall: " << (all_passed ? "PASS" : "FAIL") << "\n";
    emit(machine, human.str(), as_json);
    return all_passed ? 0 : 1;
}

int run_wavepacket(const std::string& xi1_path, const std::string& xi2_path, bool as_json) {
    const auto [xi1, dt1] = io::load_wavepacket_csv(xi1_path);
    const auto [xi2, dt2] = io::load_wavepacket_csv(xi2_path);
    if (std::abs(dt1 - dt2) > 1e-9 * dt1) {
        throw ValidationError("the two wavepackets use different sample spacings");
    }
    const double p = fock::wavepacket_coincidence(xi1, xi2, dt1);
    const json machine = {{"coincidence_probability", p},
                          {"samples", xi1.size()},
                          {"dt", dt1}};
    std::ostringstream human;
    human << "coincidence probability = " << std::setprecision(12) << p << "  ("
          << xi1.size() << " samples, dt = " << dt1 << ")\n";
    emit(machine, human.str(), as_json);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "swaptest: exact state-comparison tests on circuit and linear-optics backends"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    bool as_json = false;
    app.add_option("--seed", seed, "seed for every sampling operation (default 0)")
        ->capture_default_str();
    app.add_flag("--json", as_json, "machine-readable JSON on stdout");

    std::string phi_arg, psi_arg;
    std::string variant = "ancilla";
    long shots = 0;
    auto* swap_cmd = app.add_subcommand("swap-test", "compare two qubit-register states");
    swap_cmd->add_option("--phi", phi_arg, "state as JSON [[re,im],...] or @file")
        ->required();
    swap_cmd->add_option("--psi", psi_arg, "state as JSON [[re,im],...] or @file")
        ->required();
    swap_cmd->add_option("--variant", variant, "ancilla|destructive")
        ->capture_default_str();
    swap_cmd->add_option("--shots", shots, "also sample this many seeded test rounds");

    int hom_d = -1;
    auto* hom_cmd = app.add_subcommand("hom", "Hong-Ou-Mandel test on photon states");
    hom_cmd->add_option("--d", hom_d, "internal dimension of the photon states");
    hom_cmd->add_option("--phi", phi_arg, "photon state amplitudes")->required();
    hom_cmd->add_option("--psi", psi_arg, "photon state amplitudes")->required();

    bool with_ancilla = false;
    auto* optical_cmd =
        app.add_subcommand("optical", "interferometric SWAP test configurations");
    optical_cmd->add_option("--phi", phi_arg, "photon state amplitudes")->required();
    optical_cmd->add_option("--psi", psi_arg, "photon state amplitudes")->required();
    optical_cmd->add_flag("--with-ancilla", with_ancilla,
                          "full ancilla-photon chain instead of the plain two-detector "
                          "configuration");

    int fp_k = 3, fp_rounds = 1;
    std::string fp_x, fp_y, fp_backend = "circuit", fp_generator;
    auto* fp_cmd = app.add_subcommand("fingerprint", "compare bitstrings via fingerprints");
    fp_cmd->add_option("--k", fp_k, "simplex code parameter (message bits)")
        ->capture_default_str();
    fp_cmd->add_option("--generator", fp_generator,
                       "generator matrix file (one 0/1 row per line) instead of --k");
    fp_cmd->add_option("--x", fp_x, "first bitstring")->required();
    fp_cmd->add_option("--y", fp_y, "second bitstring")->required();
    fp_cmd->add_option("--rounds", fp_rounds, "test rounds")->capture_default_str();
    fp_cmd->add_option("--backend", fp_backend, "circuit|optical")->capture_default_str();

    std::vector<int> dims = {2, 4, 8};
    int trials = 200;
    double tol = 1e-10;
    auto* verify_cmd =
        app.add_subcommand("verify", "identity checks and cross-backend agreement");
    verify_cmd->add_option("--dims", dims, "dimensions to test")
        ->delimiter(',')
        ->capture_default_str();
    verify_cmd->add_option("--trials", trials, "trials per dimension")
        ->capture_default_str();
    verify_cmd->add_option("--tol", tol, "tolerance for every check")
        ->capture_default_str();

    std::string xi1_path, xi2_path;
    auto* wave_cmd =
        app.add_subcommand("wavepacket", "coincidence probability of sampled wavepackets");
    wave_cmd->add_option("--xi1", xi1_path, "CSV file: t,re[,im]")->required();
    wave_cmd->add_option("--xi2", xi2_path, "CSV file: t,re[,im]")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (swap_cmd->parsed()) {
            return run_swap_test(phi_arg, psi_arg, variant, shots, seed, as_json);
        }
        if (hom_cmd->parsed()) {
            return run_hom(hom_d, phi_arg, psi_arg, as_json);
        }
        if (optical_cmd->parsed()) {
            return run_optical(phi_arg, psi_arg, with_ancilla, as_json);
        }
        if (fp_cmd->parsed()) {
            return run_fingerprint(fp_k, fp_generator, fp_x, fp_y, fp_rounds, fp_backend,
                                   seed, as_json);
        }
        if (verify_cmd->parsed()) {
            return run_verify(dims, trials, tol, seed, as_json);
        }
        if (wave_cmd->parsed()) {
            return run_wavepacket(xi1_path, xi2_path, as_json);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

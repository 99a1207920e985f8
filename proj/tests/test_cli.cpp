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

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

#include <sys/wait.h>

using Catch::Approx;
using nlohmann::json;

namespace {

struct CmdResult {
    int exit_code;
    std::string out;
};

CmdResult run_cli(const std::string& args) {
    const std::string cmd = std::string(SWAPTEST_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buffer[4096];
    std::size_t n;
    while ((n = fread(buffer, 1, sizeof(buffer), pipe)) > 0) {
        out.append(buffer, n);
    }
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream file(path);
    file << content;
    return path;
}

std::string gaussian_csv(double center) {
    std::ostringstream out;
    out.precision(17);
    const double sigma = 1.0, t0 = -10.0, dt = 20.0 / 2000;
    const double norm = std::pow(2.0 * 3.14159265358979323846 * sigma * sigma, -0.25);
    for (int i = 0; i <= 2000; ++i) {
        const double t = t0 + i * dt;
        out << t << "," << norm * std::exp(-(t - center) * (t - center) / (4 * sigma * sigma))
            << "\n";
    }
    return out.str();
}

} // namespace

TEST_CASE("swap-test subcommand") {
    SECTION("orthogonal states, ancilla variant") {
        const auto r = run_cli("--json swap-test --phi '[[1,0],[0,0]]' --psi '[[0,0],[1,0]]'");
        REQUIRE(r.exit_code == 0);
        const auto j = json::parse(r.out);
        REQUIRE(j.at("p_pass").get<double>() == Approx(0.5).margin(1e-12));
        REQUIRE(j.at("variant") == "ancilla");
    }
    SECTION("destructive variant with sampling") {
        const auto r = run_cli("--json swap-test --variant destructive --shots 2000 "
                               "--phi '[[1,0],[0,0]]' --psi '[[1,0],[0,0]]'");
        REQUIRE(r.exit_code == 0);
        const auto j = json::parse(r.out);
        REQUIRE(j.at("p_fail").get<double>() == Approx(0.0).margin(1e-12));
        REQUIRE(j.at("sampled").at("pass_frequency").get<double>() == 1.0);
    }
    SECTION("unnormalized input is accepted and rescaled") {
        const auto r = run_cli("--json swap-test --phi '[[1,0],[1,0]]' --psi '[[1,0],[1,0]]'");
        REQUIRE(r.exit_code == 0);
        REQUIRE(json::parse(r.out).at("p_pass").get<double>() == Approx(1.0).margin(1e-12));
    }
    SECTION("state from a file") {
        const auto path = write_temp("swaptest_state.json", "[[1,0],[0,0]]");
        const auto r = run_cli("--json swap-test --phi @" + path.string() +
                               " --psi '[[1,0],[0,0]]'");
        REQUIRE(r.exit_code == 0);
        REQUIRE(json::parse(r.out).at("p_pass").get<double>() == Approx(1.0).margin(1e-12));
    }
}

TEST_CASE("hom subcommand") {
    const auto r = run_cli("--json hom --d 2 --phi '[[1,0],[0,0]]' --psi '[[0,0],[1,0]]'");
    REQUIRE(r.exit_code == 0);
    const auto j = json::parse(r.out);
    REQUIRE(j.at("detectors").at("p_coincidence").get<double>() ==
            Approx(0.5).margin(1e-12));
    REQUIRE(j.at("stats").at("p_fail").get<double>() == Approx(0.5).margin(1e-12));
    SECTION("dimension check") {
        const auto bad = run_cli("--json hom --d 3 --phi '[[1,0],[0,0]]' --psi '[[0,0],[1,0]]'");
        REQUIRE(bad.exit_code == 2);
    }
}

TEST_CASE("optical subcommand") {
    SECTION("plain two-detector configuration") {
        const auto r = run_cli("--json optical --phi '[[1,0],[0,0]]' --psi '[[1,0],[0,0]]'");
        REQUIRE(r.exit_code == 0);
        REQUIRE(json::parse(r.out).at("stats").at("p_pass").get<double>() ==
                Approx(1.0).margin(1e-12));
    }
    SECTION("full chain with the ancilla photon") {
        const auto r = run_cli("--json optical --with-ancilla --phi '[[1,0],[0,0]]' "
                               "--psi '[[0,0],[1,0]]'");
        REQUIRE(r.exit_code == 0);
        const auto j = json::parse(r.out);
        REQUIRE(j.at("stats").at("p_pass").get<double>() == Approx(0.5).margin(1e-12));
        REQUIRE(j.at("p_single_photon_d4").get<double>() == Approx(0.0).margin(1e-12));
    }
}

TEST_CASE("fingerprint subcommand") {
    SECTION("equal strings") {
        const auto r =
            run_cli("--json fingerprint --k 3 --x 101 --y 101 --rounds 20");
        REQUIRE(r.exit_code == 0);
        const auto j = json::parse(r.out);
        REQUIRE(j.at("verdict") == "Equal");
        REQUIRE(j.at("fail_round").is_null());
        REQUIRE(j.at("code").at("m") == 7);
        REQUIRE(j.at("code").at("delta").get<double>() == Approx(1.0 / 7).margin(1e-15));
    }
    SECTION("different strings with enough rounds") {
        const auto r = run_cli("--json fingerprint --k 3 --x 101 --y 010 --rounds 64 "
                               "--backend optical");
        REQUIRE(r.exit_code == 0);
        REQUIRE(json::parse(r.out).at("verdict") == "Different");
    }
    SECTION("generator matrix from a file") {
        const auto path = write_temp("swaptest_gen.txt", "# simplex k=2\n011\n101\n");
        const auto r = run_cli("--json fingerprint --generator " + path.string() +
                               " --x 10 --y 10 --rounds 5");
        REQUIRE(r.exit_code == 0);
        REQUIRE(json::parse(r.out).at("code").at("m") == 3);
    }
}

TEST_CASE("verify subcommand") {
    const auto r = run_cli("--json verify --dims 2,4 --trials 25");
    REQUIRE(r.exit_code == 0);
    const auto j = json::parse(r.out);
    REQUIRE(j.at("passed") == true);
    REQUIRE(j.at("agreement").at("max_abs_error").get<double>() < 1e-10);
    SECTION("an unreachable tolerance makes it exit 1") {
        const auto failed = run_cli("--json verify --dims 2 --trials 5 --tol 1e-18");
        REQUIRE(failed.exit_code == 1);
        REQUIRE(json::parse(failed.out).at("passed") == false);
    }
}

TEST_CASE("wavepacket subcommand") {
    const auto same1 = write_temp("swaptest_xi1.csv", gaussian_csv(0.0));
    const auto same2 = write_temp("swaptest_xi2.csv", gaussian_csv(0.0));
    SECTION("identical packets") {
        const auto r =
            run_cli("--json wavepacket --xi1 " + same1.string() + " --xi2 " + same2.string());
        REQUIRE(r.exit_code == 0);
        REQUIRE(json::parse(r.out).at("coincidence_probability").get<double>() ==
                Approx(0.0).margin(1e-9));
    }
    SECTION("offset packets") {
        const auto shifted = write_temp("swaptest_xi3.csv", gaussian_csv(1.5));
        const auto r = run_cli("--json wavepacket --xi1 " + same1.string() + " --xi2 " +
                               shifted.string());
        REQUIRE(r.exit_code == 0);
        const double expected = 0.5 * (1.0 - std::exp(-1.5 * 1.5 / 4.0));
        REQUIRE(json::parse(r.out).at("coincidence_probability").get<double>() ==
                Approx(expected).margin(1e-4));
    }
}

TEST_CASE("CLI error paths and determinism") {
    SECTION("unknown subcommand exits 2") {
        REQUIRE(run_cli("frobnicate").exit_code == 2);
    }
    SECTION("malformed state JSON exits 2") {
        REQUIRE(run_cli("swap-test --phi 'oops' --psi '[[1,0],[0,0]]'").exit_code == 2);
    }
    SECTION("dimension mismatch exits 2") {
        REQUIRE(run_cli("swap-test --phi '[[1,0],[0,0]]' "
                        "--psi '[[1,0],[0,0],[0,0],[0,0]]'")
                    .exit_code == 2);
    }
    SECTION("identical argv and seed give byte-identical JSON") {
        const std::string args = "--json --seed 31415 swap-test --variant destructive "
                                 "--shots 500 --phi '[[1,0],[0,0]]' --psi '[[0.6,0],[0.8,0]]'";
        const auto a = run_cli(args);
        const auto b = run_cli(args);
        REQUIRE(a.exit_code == 0);
        REQUIRE(a.out == b.out);
        REQUIRE_FALSE(a.out.empty());
    }
    SECTION("JSON doubles round-trip at full precision") {
        const auto r = run_cli("--json swap-test --phi '[[0.6,0],[0.8,0]]' "
                               "--psi '[[1,0],[0,0]]'");
        const auto j = json::parse(r.out);
        const double p = j.at("p_pass").get<double>();
        // reserialize and reparse: the value must survive exactly
        const auto round = json::parse(json(p).dump()).get<double>();
        REQUIRE(round == p);
    }
}

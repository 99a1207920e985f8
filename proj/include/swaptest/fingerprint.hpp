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
#include <string>
#include <string_view>
#include <vector>

#include "swaptest/errors.hpp"
#include "swaptest/random.hpp"

namespace swaptest::fingerprint {

/// Linear binary code with a certified bound on the fingerprint overlap.
/// Rows of `generator` are basis codewords; E(x) = x·G over GF(2).
struct Code {
    int n_bits = 0; ///< message length k
    int m = 0;      ///< codeword length
    std::vector<std::vector<std::uint8_t>> generator; ///< k rows of length m
    double delta = 0.0; ///< max |⟨h_x|h_y⟩| over distinct messages
};

/// Exhaustive max |1 − 2·weight(c)/m| over nonzero codewords of a raw
/// generator matrix (linearity reduces message pairs to single codewords).
/// Capped at 20 message bits.
double generator_delta(const std::vector<std::vector<std::uint8_t>>& generator);

double code_delta(const Code& code);

/// Builds a Code from a generator matrix, certifying delta exhaustively.
/// Codes with delta = 1 (antipodal or duplicate fingerprints, e.g. any code
/// containing the all-ones word) are rejected: no SWAP test can tell such
/// fingerprints apart.
Code make_code(std::vector<std::vector<std::uint8_t>> generator);

/// The [2^k − 1, k] simplex code: generator columns run over all nonzero
/// k-bit vectors in increasing order (row 0 holds the most significant
/// bit). Every nonzero codeword has weight 2^(k−1), so delta = 1/(2^k − 1).
Code simplex_code(int k);

/// Parses a plain-text generator matrix: one row per line, characters 0/1,
/// optional whitespace, blank lines and '#' comments ignored.
std::vector<std::vector<std::uint8_t>> parse_generator_text(const std::string& text);

/// E(x) for a message bitstring of length n_bits.
std::vector<std::uint8_t> encode(const Code& code, std::string_view x);

/// Single-particle fingerprint: amplitude i is (−1)^{E_i(x)} / √m.
struct FingerprintState {
    std::vector<Complex> amplitudes;
};
FingerprintState fingerprint_state(const Code& code, std::string_view x);

/// ⟨h_x|h_y⟩ computed exactly from the codeword distance:
/// 1 − 2·hamming(E(x), E(y))/m.
double fingerprint_overlap(const Code& code, std::string_view x, std::string_view y);

enum class CompareBackend { Circuit, Optical };
enum class CompareVerdict { Equal, Different };

struct CompareResult {
    CompareVerdict verdict;
    int rounds_used = 0;
    int fail_round = -1; ///< 1-based round of the first failure, -1 if none
};

/// Runs up to `rounds` comparison tests on fresh fingerprint copies:
/// sampled destructive circuit tests (fingerprints zero-padded to the next
/// power of two) or sampled Hong-Ou-Mandel tests (any m). Returns Different
/// at the first failed round, Equal otherwise.
CompareResult compare_strings(const Code& code, std::string_view x, std::string_view y,
                              int rounds, CompareBackend backend, RandomStream& rng);

/// ((1 + delta²)/2)^rounds: the worst-case probability that two distinct
/// strings survive every round.
double false_equal_bound(double delta, int rounds);

} // namespace swaptest::fingerprint

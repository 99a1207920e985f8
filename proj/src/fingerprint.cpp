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

#include "swaptest/fingerprint.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <cmath>
#include <sstream>

#include "swaptest/protocols.hpp"
#include "swaptest/qubit.hpp"

namespace swaptest::fingerprint {

namespace {

constexpr int kMaxExhaustiveBits = 20;

void check_generator(const std::vector<std::vector<std::uint8_t>>& generator) {
    if (generator.empty() || generator.front().empty()) {
        throw ValidationError("generator matrix must be non-empty");
    }
    const std::size_t m = generator.front().size();
    for (const auto& row : generator) {
        if (row.size() != m) {
            throw ValidationError("generator rows must have equal length");
        }
        for (auto bit : row) {
            if (bit > 1) {
                throw ValidationError("generator entries must be 0 or 1");
            }
        }
    }
    if (generator.size() > kMaxExhaustiveBits) {
        throw CapacityError("exhaustive delta certification is capped at " +
                            std::to_string(kMaxExhaustiveBits) + " message bits");
    }
}

// Rows packed into 64-bit words for the weight enumeration.
std::vector<std::vector<std::uint64_t>>
pack_rows(const std::vector<std::vector<std::uint8_t>>& generator) {
    const std::size_t m = generator.front().size();
    const std::size_t words = (m + 63) / 64;
    std::vector<std::vector<std::uint64_t>> packed(generator.size(),
                                                   std::vector<std::uint64_t>(words, 0));
    for (std::size_t r = 0; r < generator.size(); ++r) {
        for (std::size_t c = 0; c < m; ++c) {
            if (generator[r][c]) packed[r][c / 64] |= std::uint64_t{1} << (c % 64);
        }
    }
    return packed;
}

} // namespace

double generator_delta(const std::vector<std::vector<std::uint8_t>>& generator) {
    check_generator(generator);
    const int k = static_cast<int>(generator.size());
    const int m = static_cast<int>(generator.front().size());
    const auto rows = pack_rows(generator);
    const std::size_t words = rows.front().size();

    // Gray-code walk over all nonzero messages: one row XOR per step.
    std::vector<std::uint64_t> codeword(words, 0);
    std::uint64_t gray = 0;
    int max_abs = 0; // max |m − 2·weight| over nonzero codewords
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << k); ++i) {
        const std::uint64_t next = i ^ (i >> 1);
        const int flipped = std::countr_zero(gray ^ next);
        gray = next;
        int weight = 0;
        for (std::size_t w = 0; w < words; ++w) {
            codeword[w] ^= rows[flipped][w];
            weight += std::popcount(codeword[w]);
        }
        max_abs = std::max(max_abs, std::abs(m - 2 * weight));
    }
    return static_cast<double>(max_abs) / m;
}

double code_delta(const Code& code) {
    return generator_delta(code.generator);
}

Code make_code(std::vector<std::vector<std::uint8_t>> generator) {
    const double delta = generator_delta(generator);
    if (delta >= 1.0) {
        throw ValidationError(
            "code rejected: some pair of distinct messages has fingerprint overlap of "
            "magnitude 1 (identical or antipodal fingerprints, e.g. an all-ones or "
            "repeated codeword); no comparison test can distinguish them");
    }
    Code code;
    code.n_bits = static_cast<int>(generator.size());
    code.m = static_cast<int>(generator.front().size());
    code.generator = std::move(generator);
    code.delta = delta;
    return code;
}

Code simplex_code(int k) {
    if (k < 2 || k > 16) {
        throw ValidationError("simplex_code supports 2 <= k <= 16");
    }
    const int m = (1 << k) - 1;
    std::vector<std::vector<std::uint8_t>> generator(k, std::vector<std::uint8_t>(m, 0));
    for (int col = 0; col < m; ++col) {
        const int value = col + 1;
        for (int row = 0; row < k; ++row) {
            generator[row][col] = (value >> (k - 1 - row)) & 1;
        }
    }
    return make_code(std::move(generator));
}

std::vector<std::vector<std::uint8_t>> parse_generator_text(const std::string& text) {
    std::vector<std::vector<std::uint8_t>> rows;
    std::istringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) {
        std::vector<std::uint8_t> row;
        for (char ch : line) {
            if (ch == '#') break;
            if (ch == '0' || ch == '1') {
                row.push_back(ch - '0');
            } else if (!std::isspace(static_cast<unsigned char>(ch))) {
                throw ValidationError("generator file rows may only contain 0/1");
            }
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) {
        throw ValidationError("generator file contains no rows");
    }
    return rows;
}

std::vector<std::uint8_t> encode(const Code& code, std::string_view x) {
    if (static_cast<int>(x.size()) != code.n_bits) {
        throw ValidationError("message length must equal the code's n_bits");
    }
    std::vector<std::uint8_t> word(code.m, 0);
    for (int r = 0; r < code.n_bits; ++r) {
        if (x[r] == '1') {
            for (int c = 0; c < code.m; ++c) word[c] ^= code.generator[r][c];
        } else if (x[r] != '0') {
            throw ValidationError("messages must be 0/1 bitstrings");
        }
    }
    return word;
}

FingerprintState fingerprint_state(const Code& code, std::string_view x) {
    const auto word = encode(code, x);
    const double scale = 1.0 / std::sqrt(static_cast<double>(code.m));
    FingerprintState state;
    state.amplitudes.reserve(word.size());
    for (auto bit : word) {
        state.amplitudes.emplace_back(bit ? -scale : scale, 0.0);
    }
    return state;
}

double fingerprint_overlap(const Code& code, std::string_view x, std::string_view y) {
    const auto ex = encode(code, x);
    const auto ey = encode(code, y);
    int distance = 0;
    for (int c = 0; c < code.m; ++c) {
        if (ex[c] != ey[c]) ++distance;
    }
    return static_cast<double>(code.m - 2 * distance) / code.m;
}

CompareResult compare_strings(const Code& code, std::string_view x, std::string_view y,
                              int rounds, CompareBackend backend, RandomStream& rng) {
    if (rounds < 1) {
        throw ValidationError("rounds must be at least 1");
    }
    const auto hx = fingerprint_state(code, x);
    const auto hy = fingerprint_state(code, y);

    if (backend == CompareBackend::Circuit) {
        // Zero-pad to the next power of two; the extra components carry no
        // amplitude, so every overlap is unchanged.
        std::uint64_t dim = std::bit_ceil(static_cast<std::uint64_t>(code.m));
        const int num_qubits = std::countr_zero(dim);
        std::vector<Complex> padded(dim, Complex(0.0, 0.0));
        std::vector<Complex> padded_y(dim, Complex(0.0, 0.0));
        std::copy(hx.amplitudes.begin(), hx.amplitudes.end(), padded.begin());
        std::copy(hy.amplitudes.begin(), hy.amplitudes.end(), padded_y.begin());
        const qubit::PureState sx(num_qubits, std::move(padded));
        const qubit::PureState sy(num_qubits, std::move(padded_y));
        for (int round = 1; round <= rounds; ++round) {
            const auto outcome = protocols::destructive_swap_test_sample(sx, sy, rng);
            if (outcome.verdict == protocols::Verdict::Fail) {
                return CompareResult{CompareVerdict::Different, round, round};
            }
        }
        return CompareResult{CompareVerdict::Equal, rounds, -1};
    }

    // Optical backend: one Hong-Ou-Mandel test per round, failure on a
    // coincidence click.
    const auto [det, stats] = protocols::hom_swap_test(hx.amplitudes, hy.amplitudes);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int round = 1; round <= rounds; ++round) {
        if (unit(rng) < det.p_coincidence) {
            return CompareResult{CompareVerdict::Different, round, round};
        }
    }
    return CompareResult{CompareVerdict::Equal, rounds, -1};
}

double false_equal_bound(double delta, int rounds) {
    if (!(delta >= 0.0 && delta <= 1.0)) {
        throw ValidationError("delta must lie in [0, 1]");
    }
    if (rounds < 0) {
        throw ValidationError("round count must be non-negative");
    }
    return std::pow((1.0 + delta * delta) / 2.0, rounds);
}

} // namespace swaptest::fingerprint

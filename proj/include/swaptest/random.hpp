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
#include <random>
#include <vector>

namespace swaptest {

using Complex = std::complex<double>;

/// Every sampling operation takes an owned, seeded stream; results are
/// deterministic for a fixed seed on a fixed platform.
using RandomStream = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Splitting rule for batched work: stream k of a master seed is seeded with
/// splitmix64(master ^ (k+1)*golden). Batches fanned out over derived streams
/// merge deterministically by index.
inline std::uint64_t derive_stream_seed(std::uint64_t master_seed, std::uint64_t k) {
    return splitmix64(master_seed ^ ((k + 1) * 0x9E3779B97F4A7C15ULL));
}

inline RandomStream derive_stream(std::uint64_t master_seed, std::uint64_t k) {
    return RandomStream(derive_stream_seed(master_seed, k));
}

/// d independent standard complex Gaussians, normalized to a unit vector.
/// For a full register this is the Haar distribution over pure states.
inline std::vector<Complex> random_unit_amplitudes(std::size_t d, RandomStream& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<Complex> amps(d);
    double norm_sq = 0.0;
    for (auto& a : amps) {
        a = Complex(gauss(rng), gauss(rng));
        norm_sq += std::norm(a);
    }
    const double inv = 1.0 / std::sqrt(norm_sq);
    for (auto& a : amps) a *= inv;
    return amps;
}

} // namespace swaptest

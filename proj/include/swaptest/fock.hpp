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

#include <compare>
#include <complex>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "swaptest/errors.hpp"
#include "swaptest/random.hpp"

namespace swaptest::fock {

/// Stored amplitudes smaller than this are dropped after each operation.
inline constexpr double kPruneThreshold = 1e-15;

/// One bosonic mode: an internal label in [0, d) (frequency, time bin,
/// orbital angular momentum, ...) on a named spatial path.
struct Mode {
    int internal = 0;
    std::string path;

    friend auto operator<=>(const Mode&, const Mode&) = default;
};

/// Photon counts per occupied mode; absent modes are vacuum. Entries are
/// kept sorted so equality and map ordering are well defined.
class OccupationVector {
  public:
    OccupationVector() = default;
    explicit OccupationVector(std::vector<std::pair<Mode, int>> occupations);

    const std::vector<std::pair<Mode, int>>& entries() const { return entries_; }
    int total_photons() const;
    int photons_on_path(std::string_view path) const;
    int count(const Mode& mode) const;
    bool empty() const { return entries_.empty(); }

    /// Copy with one more photon in `mode`.
    OccupationVector with_photon_added(const Mode& mode) const;

    friend auto operator<=>(const OccupationVector&, const OccupationVector&) = default;

  private:
    std::vector<std::pair<Mode, int>> entries_;
};

/// Complex-weighted superposition of occupation vectors with a declared
/// internal dimension d. Public operations keep the squared norm within
/// 1e-12 of 1 (apply_creation is the deliberate exception).
class FockSuperposition {
  public:
    /// The vacuum state (one empty occupation vector with amplitude 1).
    explicit FockSuperposition(int internal_dim);

    /// The zero vector of the Fock space; building block for the element ops.
    static FockSuperposition zero(int internal_dim);

    int internal_dim() const { return internal_dim_; }
    const std::map<OccupationVector, Complex>& terms() const { return terms_; }
    Complex amplitude(const OccupationVector& occ) const;
    double norm_sq() const;
    int max_total_photons() const;

    /// Accumulates amplitude onto a term (used by the element ops).
    void add_term(const OccupationVector& occ, Complex amplitude);
    void prune(double threshold = kPruneThreshold);
    void scale(Complex factor);

  private:
    int internal_dim_;
    std::map<OccupationVector, Complex> terms_;
};

/// The vacuum |0⟩ (one empty term with amplitude 1).
FockSuperposition vacuum_state(int internal_dim);

/// Σ_i α_i · (one photon in mode (i, path)). Any nonzero vector is accepted
/// and renormalized; the zero vector is rejected.
FockSuperposition single_photon(const std::vector<Complex>& internal_amplitudes,
                                const std::string& path);

/// Product of superpositions living on disjoint path sets.
FockSuperposition product(const FockSuperposition& a, const FockSuperposition& b);

/// â†_mode: each term's count at `mode` goes up by one and its amplitude
/// picks up √(n+1). The result is intentionally unnormalized.
FockSuperposition apply_creation(const FockSuperposition& state, const Mode& mode);

/// Involution on internal labels applied to the reflected beam-splitter
/// output (identity when empty).
using Reflect = std::function<int(int)>;

/// ℓ → −ℓ over a symmetric label set stored as 0..d-1.
Reflect oam_reflection(int internal_dim);

/// 50% beam splitter between two paths, real Hadamard convention:
///   â†_{i,up}  → (â†_{r(i),up} + â†_{i,low})/√2
///   â†_{i,low} → (â†_{i,up} − â†_{r(i),low})/√2
/// where r is the reflect involution (identity by default) acting on the
/// reflected output of each port. Photons on other paths are untouched.
FockSuperposition beam_splitter(const FockSuperposition& state,
                                const std::string& upper, const std::string& lower,
                                const Reflect& reflect = {});

/// Multiplies each term by exp(i·theta·n) with n the photon count on `path`.
FockSuperposition phase_shift(const FockSuperposition& state, const std::string& path,
                              double theta);

/// Idealized optical CZ: each term picks up (−1)^(n_a·n_b).
FockSuperposition cross_phase(const FockSuperposition& state, const std::string& path_a,
                              const std::string& path_b);

/// Click statistics of two binary (non-counting) detectors.
struct DetectorStats {
    double p_upper_only = 0.0;
    double p_lower_only = 0.0;
    double p_coincidence = 0.0;
    double p_none = 0.0;
};

DetectorStats detector_stats(const FockSuperposition& state, const std::string& upper,
                             const std::string& lower);

/// Coincidence probability (1 − |∫ ξ₁*(t) ξ₂(t) dt|²)/2 for two sampled
/// wavepacket amplitudes on a uniform grid, trapezoid-corrected at the
/// endpoints. Each input must satisfy Σ|ξ|²·dt = 1 within 1e-6 and is then
/// renormalized; larger drift is rejected.
double wavepacket_coincidence(std::span<const Complex> xi1, std::span<const Complex> xi2,
                              double dt);

} // namespace swaptest::fock

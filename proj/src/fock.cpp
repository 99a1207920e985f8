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

#include "swaptest/fock.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace swaptest::fock {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

double factorial(int n) {
    if (n < 0 || n > 170) {
        throw ValidationError("factorial argument out of range");
    }
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

double binomial(int n, int k) {
    double b = 1.0;
    for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
    return b;
}

int checked_reflect(const Reflect& r, int internal, int internal_dim) {
    const int out = r(internal);
    if (out < 0 || out >= internal_dim) {
        throw ValidationError("reflect involution left the internal label range");
    }
    if (r(out) != internal) {
        throw ValidationError("reflect map is not an involution");
    }
    return out;
}

} // namespace

OccupationVector::OccupationVector(std::vector<std::pair<Mode, int>> occupations) {
    for (const auto& [mode, count] : occupations) {
        if (count < 0) {
            throw ValidationError("photon counts must be non-negative");
        }
    }
    std::sort(occupations.begin(), occupations.end());
    for (auto& [mode, count] : occupations) {
        if (count == 0) continue;
        if (!entries_.empty() && entries_.back().first == mode) {
            entries_.back().second += count;
        } else {
            entries_.emplace_back(std::move(mode), count);
        }
    }
}

int OccupationVector::total_photons() const {
    int n = 0;
    for (const auto& [mode, count] : entries_) n += count;
    return n;
}

int OccupationVector::photons_on_path(std::string_view path) const {
    int n = 0;
    for (const auto& [mode, count] : entries_) {
        if (mode.path == path) n += count;
    }
    return n;
}

int OccupationVector::count(const Mode& mode) const {
    for (const auto& [m, count] : entries_) {
        if (m == mode) return count;
    }
    return 0;
}

OccupationVector OccupationVector::with_photon_added(const Mode& mode) const {
    auto occ = entries_;
    occ.emplace_back(mode, 1);
    return OccupationVector(std::move(occ));
}

FockSuperposition::FockSuperposition(int internal_dim) : internal_dim_(internal_dim) {
    if (internal_dim < 1) {
        throw ValidationError("internal dimension must be at least 1");
    }
    terms_.emplace(OccupationVector{}, Complex(1.0, 0.0));
}

FockSuperposition FockSuperposition::zero(int internal_dim) {
    FockSuperposition s(internal_dim);
    s.terms_.clear();
    return s;
}

Complex FockSuperposition::amplitude(const OccupationVector& occ) const {
    auto it = terms_.find(occ);
    return it == terms_.end() ? Complex(0.0, 0.0) : it->second;
}

double FockSuperposition::norm_sq() const {
    double n2 = 0.0;
    for (const auto& [occ, amp] : terms_) n2 += std::norm(amp);
    return n2;
}

int FockSuperposition::max_total_photons() const {
    int n = 0;
    for (const auto& [occ, amp] : terms_) n = std::max(n, occ.total_photons());
    return n;
}

void FockSuperposition::add_term(const OccupationVector& occ, Complex amplitude) {
    for (const auto& [mode, count] : occ.entries()) {
        if (mode.internal < 0 || mode.internal >= internal_dim_) {
            throw ValidationError("occupied mode has internal label " +
                                  std::to_string(mode.internal) +
                                  " outside the declared dimension " +
                                  std::to_string(internal_dim_));
        }
    }
    terms_[occ] += amplitude;
}

void FockSuperposition::prune(double threshold) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (std::abs(it->second) < threshold) {
            it = terms_.erase(it);
        } else {
            ++it;
        }
    }
}

void FockSuperposition::scale(Complex factor) {
    for (auto& [occ, amp] : terms_) amp *= factor;
}

FockSuperposition vacuum_state(int internal_dim) {
    return FockSuperposition(internal_dim);
}

FockSuperposition single_photon(const std::vector<Complex>& internal_amplitudes,
                                const std::string& path) {
    if (internal_amplitudes.empty()) {
        throw ValidationError("single_photon needs at least one internal amplitude");
    }
    double n2 = 0.0;
    for (const auto& a : internal_amplitudes) n2 += std::norm(a);
    if (n2 <= 0.0) {
        throw ValidationError("single_photon amplitudes must not all be zero");
    }
    const double inv = 1.0 / std::sqrt(n2);
    auto out = FockSuperposition::zero(static_cast<int>(internal_amplitudes.size()));
    for (std::size_t i = 0; i < internal_amplitudes.size(); ++i) {
        if (internal_amplitudes[i] == Complex(0.0, 0.0)) continue;
        OccupationVector occ({{Mode{static_cast<int>(i), path}, 1}});
        out.add_term(occ, internal_amplitudes[i] * inv);
    }
    out.prune();
    return out;
}

FockSuperposition product(const FockSuperposition& a, const FockSuperposition& b) {
    if (a.internal_dim() != b.internal_dim()) {
        throw ValidationError("product requires equal internal dimensions");
    }
    std::set<std::string> paths_a;
    for (const auto& [occ, amp] : a.terms()) {
        for (const auto& [mode, count] : occ.entries()) paths_a.insert(mode.path);
    }
    for (const auto& [occ, amp] : b.terms()) {
        for (const auto& [mode, count] : occ.entries()) {
            if (paths_a.count(mode.path)) {
                throw ValidationError("product factors must occupy disjoint paths (both use '" +
                                      mode.path + "')");
            }
        }
    }
    auto out = FockSuperposition::zero(a.internal_dim());
    for (const auto& [occ_a, amp_a] : a.terms()) {
        for (const auto& [occ_b, amp_b] : b.terms()) {
            auto merged = occ_a.entries();
            const auto& eb = occ_b.entries();
            merged.insert(merged.end(), eb.begin(), eb.end());
            out.add_term(OccupationVector(std::move(merged)), amp_a * amp_b);
        }
    }
    out.prune();
    return out;
}

FockSuperposition apply_creation(const FockSuperposition& state, const Mode& mode) {
    if (mode.internal < 0 || mode.internal >= state.internal_dim()) {
        throw ValidationError("mode internal label out of range");
    }
    auto out = FockSuperposition::zero(state.internal_dim());
    for (const auto& [occ, amp] : state.terms()) {
        const int n = occ.count(mode);
        out.add_term(occ.with_photon_added(mode), amp * std::sqrt(double(n) + 1.0));
    }
    out.prune();
    return out;
}

Reflect oam_reflection(int internal_dim) {
    return [internal_dim](int i) { return internal_dim - 1 - i; };
}

FockSuperposition beam_splitter(const FockSuperposition& state, const std::string& upper,
                                const std::string& lower, const Reflect& reflect) {
    if (upper == lower) {
        throw ValidationError("beam splitter ports must be distinct paths");
    }
    const int d = state.internal_dim();
    auto out = FockSuperposition::zero(d);

    for (const auto& [occ, amp] : state.terms()) {
        std::vector<std::pair<Mode, int>> affected;
        std::vector<std::pair<Mode, int>> untouched;
        for (const auto& entry : occ.entries()) {
            if (entry.first.path == upper || entry.first.path == lower) {
                affected.push_back(entry);
            } else {
                untouched.push_back(entry);
            }
        }

        // Rewrite the affected part as a creation-operator monomial on
        // vacuum: |..n_m..⟩ = Π (â†_m)^{n_m}/√(n_m!) |0⟩.
        Complex seed = amp;
        for (const auto& [mode, count] : affected) {
            seed /= std::sqrt(factorial(count));
        }
        std::map<OccupationVector, Complex> poly;
        poly.emplace(OccupationVector{}, seed);

        // Substitute each input operator by its two-term image and expand.
        for (const auto& [mode, count] : affected) {
            Mode out_a, out_b;
            double coeff_a, coeff_b;
            if (mode.path == upper) {
                const int refl = reflect ? checked_reflect(reflect, mode.internal, d)
                                         : mode.internal;
                out_a = Mode{refl, upper};
                coeff_a = kInvSqrt2;
                out_b = Mode{mode.internal, lower};
                coeff_b = kInvSqrt2;
            } else {
                out_a = Mode{mode.internal, upper};
                coeff_a = kInvSqrt2;
                const int refl = reflect ? checked_reflect(reflect, mode.internal, d)
                                         : mode.internal;
                out_b = Mode{refl, lower};
                coeff_b = -kInvSqrt2;
            }
            std::map<OccupationVector, Complex> next;
            for (const auto& [mono, c] : poly) {
                for (int k = 0; k <= count; ++k) {
                    auto grown = mono.entries();
                    if (k > 0) grown.emplace_back(out_a, k);
                    if (count - k > 0) grown.emplace_back(out_b, count - k);
                    const double w = binomial(count, k) * std::pow(coeff_a, k) *
                                     std::pow(coeff_b, count - k);
                    next[OccupationVector(std::move(grown))] += c * w;
                }
            }
            poly = std::move(next);
        }

        // Back to Fock amplitudes: Π (â†_m)^{k_m} |0⟩ = √(Π k_m!) |..k_m..⟩.
        for (const auto& [mono, c] : poly) {
            double boson = 1.0;
            for (const auto& [mode, count] : mono.entries()) boson *= factorial(count);
            auto combined = untouched;
            const auto& me = mono.entries();
            combined.insert(combined.end(), me.begin(), me.end());
            out.add_term(OccupationVector(std::move(combined)), c * std::sqrt(boson));
        }
    }
    out.prune();
    return out;
}

FockSuperposition phase_shift(const FockSuperposition& state, const std::string& path,
                              double theta) {
    auto out = FockSuperposition::zero(state.internal_dim());
    for (const auto& [occ, amp] : state.terms()) {
        const int n = occ.photons_on_path(path);
        out.add_term(occ, amp * std::polar(1.0, theta * n));
    }
    out.prune();
    return out;
}

FockSuperposition cross_phase(const FockSuperposition& state, const std::string& path_a,
                              const std::string& path_b) {
    auto out = FockSuperposition::zero(state.internal_dim());
    for (const auto& [occ, amp] : state.terms()) {
        const int na = occ.photons_on_path(path_a);
        const int nb = occ.photons_on_path(path_b);
        const double sign = ((na * nb) % 2 == 0) ? 1.0 : -1.0;
        out.add_term(occ, amp * sign);
    }
    out.prune();
    return out;
}

DetectorStats detector_stats(const FockSuperposition& state, const std::string& upper,
                             const std::string& lower) {
    DetectorStats stats;
    for (const auto& [occ, amp] : state.terms()) {
        const bool up = occ.photons_on_path(upper) > 0;
        const bool low = occ.photons_on_path(lower) > 0;
        const double p = std::norm(amp);
        if (up && low) {
            stats.p_coincidence += p;
        } else if (up) {
            stats.p_upper_only += p;
        } else if (low) {
            stats.p_lower_only += p;
        } else {
            stats.p_none += p;
        }
    }
    return stats;
}

double wavepacket_coincidence(std::span<const Complex> xi1, std::span<const Complex> xi2,
                              double dt) {
    if (xi1.size() != xi2.size()) {
        throw ValidationError("wavepacket sample arrays must have equal length");
    }
    if (xi1.size() < 2) {
        throw ValidationError("wavepacket needs at least two samples");
    }
    if (!(dt > 0.0)) {
        throw ValidationError("sample spacing must be positive");
    }
    const std::size_t n = xi1.size();
    auto weighted = [&](std::span<const Complex> x, std::span<const Complex> y) {
        Complex acc(0.0, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            const double w = (i == 0 || i == n - 1) ? 0.5 : 1.0;
            acc += w * std::conj(x[i]) * y[i];
        }
        return acc * dt;
    };
    const double n1 = weighted(xi1, xi1).real();
    const double n2 = weighted(xi2, xi2).real();
    if (std::abs(n1 - 1.0) > 1e-6 || std::abs(n2 - 1.0) > 1e-6) {
        throw ValidationError("wavepacket samples must be normalized to Σ|ξ|²·dt = 1 "
                              "within 1e-6");
    }
    const Complex overlap = weighted(xi1, xi2) / std::sqrt(n1 * n2);
    const double p = 0.5 * (1.0 - std::norm(overlap));
    return std::clamp(p, 0.0, 0.5);
}

} // namespace swaptest::fock

// Copyright 2026 The microkerr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MICROKERR_POL_STATE_H
#define MICROKERR_POL_STATE_H

#include <complex>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "microkerr/random_stream.h"

namespace microkerr {

enum class Pol : char { H = 'H', V = 'V' };

/// Pure polarization state of k single-photon modes.
///
/// Amplitudes live in a sparse map keyed by basis strings over {H, V}^k.
/// Character i of a key is the polarization of modes()[i] (modes in
/// registration order, big-endian). Every public operation leaves the state
/// normalized, with amplitudes below kPruneThreshold removed.
class PolState {
   public:
    using Amplitudes = std::map<std::string, std::complex<double>>;

    static constexpr double kPruneThreshold = 1e-14;

    PolState() = default;
    /// Throws RegisterMismatch on malformed keys or duplicate modes,
    /// UnnormalizedInput when the state has zero norm. Renormalizes.
    PolState(std::vector<std::string> modes, Amplitudes amplitudes);

    /// Single basis state, e.g. basis({"a", "b"}, "HV").
    static PolState basis(std::vector<std::string> modes, std::string_view label);

    const std::vector<std::string> &modes() const { return modes_; }
    const Amplitudes &amplitudes() const { return amplitudes_; }
    size_t num_modes() const { return modes_.size(); }

    /// Throws UnknownMode.
    size_t mode_index(std::string_view mode) const;
    bool has_mode(std::string_view mode) const;

    std::complex<double> amplitude(std::string_view label) const;
    double norm_squared() const;

    /// One `<label> <re> <im>` line per basis string, sorted lexicographically.
    std::string dump() const;

   private:
    void prune_and_normalize();

    std::vector<std::string> modes_;
    Amplitudes amplitudes_;
};

/// x |H...H> + y |V...V> over `modes`.
struct SourcePair {
    std::complex<double> x;
    std::complex<double> y;
    std::vector<std::string> modes;
};

/// Tensor product of the sources, modes concatenated in order. Throws
/// UnnormalizedInput if any |x|^2 + |y|^2 deviates from 1 by more than 1e-10.
PolState product_state(std::span<const SourcePair> sources);

/// 45-degree rotator: H -> (H + V)/sqrt2, V -> (H - V)/sqrt2.
PolState rotate45(const PolState &state, std::string_view mode);

/// Negates every amplitude whose polarization at `mode` equals `which`.
PolState phase_flip(const PolState &state, std::string_view mode, Pol which);

/// Unnormalized weight and normalized remainder after projecting `mode`
/// onto `outcome` and removing it from the register.
struct Projection {
    double probability;
    PolState remainder;
};
/// Throws ZeroNormBranch when the projection vanishes.
Projection project_out(const PolState &state, std::string_view mode, Pol outcome);

/// Probability of finding `mode` in H.
double probability_h(const PolState &state, std::string_view mode);

struct DetectionEvent {
    std::string mode;
    Pol outcome;
    std::string detector;

    bool operator==(const DetectionEvent &) const = default;
};

struct Detection {
    DetectionEvent event;
    PolState state;
};

/// PBS followed by a detector in each output port; H is transmitted to the
/// first detector of the pair, V reflected to the second. `pbs_index` k maps
/// to detectors D(2k+1) / D(2k+2). Born-rule sampled.
Detection detect(const PolState &state, std::string_view mode, RandomStream &rng, int pbs_index = 0);

/// |<a|b>|^2. Throws RegisterMismatch unless both share the same mode list.
double fidelity(const PolState &a, const PolState &b);

}  // namespace microkerr

#endif  // MICROKERR_POL_STATE_H

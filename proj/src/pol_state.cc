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

#include "microkerr/pol_state.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>
#include <sstream>

#include "microkerr/errors.h"

namespace microkerr {

namespace {

constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;

char flipped(char c) { return c == 'H' ? 'V' : 'H'; }

}  // namespace

PolState::PolState(std::vector<std::string> modes, Amplitudes amplitudes)
    : modes_(std::move(modes)), amplitudes_(std::move(amplitudes)) {
    std::set<std::string_view> seen;
    for (const auto &m : modes_) {
        if (!seen.insert(m).second) {
            throw RegisterMismatch("duplicate mode label '" + m + "'");
        }
    }
    for (const auto &[label, amp] : amplitudes_) {
        if (label.size() != modes_.size() ||
            !std::all_of(label.begin(), label.end(), [](char c) { return c == 'H' || c == 'V'; })) {
            throw RegisterMismatch("basis label '" + label + "' does not match the mode register");
        }
        if (!std::isfinite(amp.real()) || !std::isfinite(amp.imag())) {
            throw UnnormalizedInput("non-finite amplitude on '" + label + "'");
        }
    }
    prune_and_normalize();
}

PolState PolState::basis(std::vector<std::string> modes, std::string_view label) {
    return PolState(std::move(modes), Amplitudes{{std::string(label), 1.0}});
}

void PolState::prune_and_normalize() {
    std::erase_if(amplitudes_, [](const auto &kv) { return std::abs(kv.second) < kPruneThreshold; });
    const double n2 = norm_squared();
    if (!(n2 > 0.0)) {
        throw UnnormalizedInput("state has zero norm");
    }
    const double scale = 1.0 / std::sqrt(n2);
    for (auto &[label, amp] : amplitudes_) {
        amp *= scale;
    }
}

size_t PolState::mode_index(std::string_view mode) const {
    const auto it = std::find(modes_.begin(), modes_.end(), mode);
    if (it == modes_.end()) {
        throw UnknownMode("unknown mode '" + std::string(mode) + "'");
    }
    return static_cast<size_t>(it - modes_.begin());
}

bool PolState::has_mode(std::string_view mode) const {
    return std::find(modes_.begin(), modes_.end(), mode) != modes_.end();
}

std::complex<double> PolState::amplitude(std::string_view label) const {
    const auto it = amplitudes_.find(std::string(label));
    return it == amplitudes_.end() ? std::complex<double>{} : it->second;
}

double PolState::norm_squared() const {
    double sum = 0.0;
    for (const auto &[label, amp] : amplitudes_) {
        sum += std::norm(amp);
    }
    return sum;
}

std::string PolState::dump() const {
    std::ostringstream out;
    char buf[64];
    for (const auto &[label, amp] : amplitudes_) {
        std::snprintf(buf, sizeof(buf), " %.17g %.17g\n", amp.real(), amp.imag());
        out << label << buf;
    }
    return out.str();
}

PolState product_state(std::span<const SourcePair> sources) {
    std::vector<std::string> modes;
    PolState::Amplitudes amps{{"", 1.0}};
    for (const auto &src : sources) {
        if (src.modes.empty()) {
            throw RegisterMismatch("source with no modes");
        }
        if (std::abs(std::norm(src.x) + std::norm(src.y) - 1.0) > 1e-10) {
            throw UnnormalizedInput("source coefficients must satisfy |x|^2 + |y|^2 = 1");
        }
        const std::string all_h(src.modes.size(), 'H');
        const std::string all_v(src.modes.size(), 'V');
        PolState::Amplitudes next;
        for (const auto &[label, amp] : amps) {
            if (src.x != 0.0) next[label + all_h] += amp * src.x;
            if (src.y != 0.0) next[label + all_v] += amp * src.y;
        }
        amps = std::move(next);
        modes.insert(modes.end(), src.modes.begin(), src.modes.end());
    }
    return PolState(std::move(modes), std::move(amps));
}

PolState rotate45(const PolState &state, std::string_view mode) {
    const size_t k = state.mode_index(mode);
    PolState::Amplitudes out;
    for (const auto &[label, amp] : state.amplitudes()) {
        std::string other = label;
        other[k] = flipped(label[k]);
        const auto scaled = amp * kInvSqrt2;
        // H -> (H + V)/sqrt2 ; V -> (H - V)/sqrt2
        if (label[k] == 'H') {
            out[label] += scaled;
            out[other] += scaled;
        } else {
            out[other] += scaled;
            out[label] -= scaled;
        }
    }
    return PolState(state.modes(), std::move(out));
}

PolState phase_flip(const PolState &state, std::string_view mode, Pol which) {
    const size_t k = state.mode_index(mode);
    PolState::Amplitudes out = state.amplitudes();
    for (auto &[label, amp] : out) {
        if (label[k] == static_cast<char>(which)) {
            amp = -amp;
        }
    }
    return PolState(state.modes(), std::move(out));
}

double probability_h(const PolState &state, std::string_view mode) {
    const size_t k = state.mode_index(mode);
    double p = 0.0;
    for (const auto &[label, amp] : state.amplitudes()) {
        if (label[k] == 'H') {
            p += std::norm(amp);
        }
    }
    return p;
}

Projection project_out(const PolState &state, std::string_view mode, Pol outcome) {
    const size_t k = state.mode_index(mode);
    std::vector<std::string> modes = state.modes();
    modes.erase(modes.begin() + static_cast<std::ptrdiff_t>(k));

    PolState::Amplitudes out;
    double weight = 0.0;
    for (const auto &[label, amp] : state.amplitudes()) {
        if (label[k] == static_cast<char>(outcome)) {
            std::string rest = label;
            rest.erase(k, 1);
            out[rest] += amp;
            weight += std::norm(amp);
        }
    }
    if (!(weight > 0.0)) {
        throw ZeroNormBranch("projection of mode '" + std::string(mode) + "' onto " +
                             static_cast<char>(outcome) + " has zero norm");
    }
    return {weight, PolState(std::move(modes), std::move(out))};
}

Detection detect(const PolState &state, std::string_view mode, RandomStream &rng, int pbs_index) {
    const double p_h = probability_h(state, mode);
    const Pol outcome = rng.uniform() < p_h ? Pol::H : Pol::V;
    auto [weight, rest] = project_out(state, mode, outcome);
    const int detector = 2 * pbs_index + (outcome == Pol::H ? 1 : 2);
    return {DetectionEvent{std::string(mode), outcome, "D" + std::to_string(detector)}, std::move(rest)};
}

double fidelity(const PolState &a, const PolState &b) {
    if (a.modes() != b.modes()) {
        throw RegisterMismatch("fidelity requires identical mode registers");
    }
    std::complex<double> overlap{};
    for (const auto &[label, amp] : a.amplitudes()) {
        overlap += std::conj(amp) * b.amplitude(label);
    }
    return std::clamp(std::norm(overlap), 0.0, 1.0);
}

}  // namespace microkerr

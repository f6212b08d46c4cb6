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

#include "microkerr/dense_state.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "microkerr/errors.h"

namespace microkerr {

DenseState::DenseState(std::vector<std::string> modes, std::vector<std::complex<double>> amplitudes)
    : modes_(std::move(modes)), amps_(std::move(amplitudes)) {
    if (amps_.size() != (size_t{1} << modes_.size())) {
        throw RegisterMismatch("dense amplitude vector must have 2^k entries");
    }
}

DenseState DenseState::from_sources(std::span<const SourcePair> sources) {
    std::vector<std::string> modes;
    std::vector<std::complex<double>> amps{1.0};
    for (const auto &src : sources) {
        const size_t k = src.modes.size();
        std::vector<std::complex<double>> local(size_t{1} << k);
        local.front() = src.x;
        local.back() = src.y;
        std::vector<std::complex<double>> next(amps.size() * local.size());
        for (size_t i = 0; i < amps.size(); ++i) {
            for (size_t j = 0; j < local.size(); ++j) {
                next[i * local.size() + j] = amps[i] * local[j];
            }
        }
        amps = std::move(next);
        modes.insert(modes.end(), src.modes.begin(), src.modes.end());
    }
    return DenseState(std::move(modes), std::move(amps));
}

DenseState DenseState::from_sparse(const PolState &state) {
    const size_t k = state.num_modes();
    std::vector<std::complex<double>> amps(size_t{1} << k);
    for (const auto &[label, amp] : state.amplitudes()) {
        size_t index = 0;
        for (char c : label) {
            index = (index << 1) | (c == 'V' ? 1u : 0u);
        }
        amps[index] = amp;
    }
    return DenseState(state.modes(), std::move(amps));
}

size_t DenseState::bit_of(std::string_view mode) const {
    const auto it = std::find(modes_.begin(), modes_.end(), mode);
    if (it == modes_.end()) {
        throw UnknownMode("unknown mode '" + std::string(mode) + "'");
    }
    return modes_.size() - 1 - static_cast<size_t>(it - modes_.begin());
}

std::complex<double> DenseState::amplitude(std::string_view label) const {
    if (label.size() != modes_.size()) {
        throw RegisterMismatch("label length does not match register");
    }
    size_t index = 0;
    for (char c : label) {
        index = (index << 1) | (c == 'V' ? 1u : 0u);
    }
    return amps_[index];
}

double DenseState::norm_squared() const {
    double s = 0.0;
    for (const auto &a : amps_) s += std::norm(a);
    return s;
}

void DenseState::rotate45(std::string_view mode) {
    const size_t mask = size_t{1} << bit_of(mode);
    const double h = 1.0 / std::numbers::sqrt2;
    for (size_t i = 0; i < amps_.size(); ++i) {
        if (i & mask) continue;
        const auto a_h = amps_[i];
        const auto a_v = amps_[i | mask];
        amps_[i] = h * (a_h + a_v);
        amps_[i | mask] = h * (a_h - a_v);
    }
}

void DenseState::phase_flip(std::string_view mode, Pol which) {
    const size_t mask = size_t{1} << bit_of(mode);
    const bool want_v = which == Pol::V;
    for (size_t i = 0; i < amps_.size(); ++i) {
        if (((i & mask) != 0) == want_v) amps_[i] = -amps_[i];
    }
}

void DenseState::project(std::string_view mode, Pol keep) {
    const size_t mask = size_t{1} << bit_of(mode);
    const bool keep_v = keep == Pol::V;
    for (size_t i = 0; i < amps_.size(); ++i) {
        if (((i & mask) != 0) != keep_v) amps_[i] = 0.0;
    }
}

void DenseState::project_h_count(std::string_view a, std::string_view b, int h_count) {
    const size_t ma = size_t{1} << bit_of(a);
    const size_t mb = size_t{1} << bit_of(b);
    for (size_t i = 0; i < amps_.size(); ++i) {
        const int h = ((i & ma) ? 0 : 1) + ((i & mb) ? 0 : 1);
        if (h != h_count) amps_[i] = 0.0;
    }
}

void DenseState::normalize() {
    const double n = std::sqrt(norm_squared());
    for (auto &a : amps_) a /= n;
}

DenseState DenseState::restrict_to(std::span<const std::string> measured, std::span<const Pol> outcomes) const {
    if (measured.size() != outcomes.size()) {
        throw RegisterMismatch("measured modes and outcomes differ in length");
    }
    size_t fixed_mask = 0;
    size_t fixed_bits = 0;
    for (size_t m = 0; m < measured.size(); ++m) {
        const size_t mask = size_t{1} << bit_of(measured[m]);
        fixed_mask |= mask;
        if (outcomes[m] == Pol::V) fixed_bits |= mask;
    }

    std::vector<std::string> kept;
    std::vector<size_t> kept_bits;
    for (size_t i = 0; i < modes_.size(); ++i) {
        const size_t bit = modes_.size() - 1 - i;
        if (!(fixed_mask & (size_t{1} << bit))) {
            kept.push_back(modes_[i]);
            kept_bits.push_back(bit);
        }
    }

    std::vector<std::complex<double>> out(size_t{1} << kept.size());
    for (size_t j = 0; j < out.size(); ++j) {
        size_t full = fixed_bits;
        for (size_t q = 0; q < kept.size(); ++q) {
            if (j & (size_t{1} << (kept.size() - 1 - q))) full |= size_t{1} << kept_bits[q];
        }
        out[j] = amps_[full];
    }
    return DenseState(std::move(kept), std::move(out));
}

}  // namespace microkerr

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

#include "microkerr/parity_qnd.h"

#include <cmath>
#include <limits>
#include <vector>

#include "microkerr/errors.h"
#include "microkerr/units.h"

namespace microkerr {

namespace {

constexpr double kSamePhase = 1e-12;

// One probe branch: the configurations (H on m1, H on m2) sharing a phase.
struct Branch {
    ParityClass klass;
    double phase;
    std::vector<std::pair<bool, bool>> configs;
    double probability = 0.0;
};

std::vector<Branch> build_branches(const KerrChannel &ch1, const KerrChannel &ch2) {
    std::vector<Branch> branches;
    for (int h1 = 0; h1 <= 1; ++h1) {
        for (int h2 = 0; h2 <= 1; ++h2) {
            const auto klass = static_cast<ParityClass>(h1 + h2);
            const double phase = cascaded_phase(h1, h2, ch1, ch2);
            bool merged = false;
            for (auto &b : branches) {
                if (b.klass == klass && std::abs(circular_difference(b.phase, phase)) < kSamePhase) {
                    b.configs.emplace_back(h1 == 1, h2 == 1);
                    merged = true;
                    break;
                }
            }
            if (!merged) {
                branches.push_back({klass, phase, {{h1 == 1, h2 == 1}}});
            }
        }
    }
    return branches;
}

}  // namespace

const char *to_string(ParityClass c) {
    switch (c) {
        case ParityClass::kEvenVV:
            return "even_vv";
        case ParityClass::kOdd:
            return "odd";
        case ParityClass::kEvenHH:
            return "even_hh";
    }
    return "?";
}

int h_count(ParityClass c) { return static_cast<int>(c); }

std::array<double, 3> parity_phases(const KerrChannel &ch) {
    return {cascaded_phase(0, 0, ch, ch), cascaded_phase(1, 0, ch, ch), cascaded_phase(1, 1, ch, ch)};
}

ParityClass classify_phase(double measured, const KerrChannel &ch) {
    const auto phases = parity_phases(ch);
    size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (size_t k = 0; k < phases.size(); ++k) {
        const double d = std::abs(circular_difference(measured, phases[k]));
        if (d < best_d) {
            best_d = d;
            best = k;
        }
    }
    return static_cast<ParityClass>(best);
}

std::array<double, 3> class_probabilities(const PolState &state, std::string_view m1, std::string_view m2) {
    const size_t i1 = state.mode_index(m1);
    const size_t i2 = state.mode_index(m2);
    std::array<double, 3> p{};
    for (const auto &[label, amp] : state.amplitudes()) {
        p[(label[i1] == 'H') + (label[i2] == 'H')] += std::norm(amp);
    }
    return p;
}

QndRecord parity_measure(const PolState &state, std::string_view m1, std::string_view m2, const KerrChannel &ch,
                         const ProbeState &probe, const HomodyneModel &model, RandomStream &rng) {
    return parity_measure(state, m1, m2, ch, ch, probe, model, rng);
}

QndRecord parity_measure(const PolState &state, std::string_view m1, std::string_view m2, const KerrChannel &ch1,
                         const KerrChannel &ch2, const ProbeState &probe, const HomodyneModel &model,
                         RandomStream &rng) {
    if (m1 == m2) {
        throw InvalidParameter("parity measurement needs two distinct modes");
    }
    if (!(ch1.kappa2 > 0.0) || !(ch2.kappa2 > 0.0)) {
        throw InvalidParameter("readout decay kappa2 must be positive");
    }
    const size_t i1 = state.mode_index(m1);
    const size_t i2 = state.mode_index(m2);

    auto branches = build_branches(ch1, ch2);
    auto branch_of = [&](const std::string &label) -> size_t {
        const std::pair<bool, bool> cfg{label[i1] == 'H', label[i2] == 'H'};
        for (size_t b = 0; b < branches.size(); ++b) {
            for (const auto &c : branches[b].configs) {
                if (c == cfg) return b;
            }
        }
        throw ZeroNormBranch("configuration not covered by any probe branch");
    };
    for (const auto &[label, amp] : state.amplitudes()) {
        branches[branch_of(label)].probability += std::norm(amp);
    }

    // Born sampling; the last nonempty branch absorbs rounding at u ~ 1.
    const double u = rng.uniform();
    size_t chosen = branches.size();
    double cumulative = 0.0;
    for (size_t b = 0; b < branches.size(); ++b) {
        if (branches[b].probability <= 0.0) continue;
        chosen = b;
        cumulative += branches[b].probability;
        if (u < cumulative) break;
    }
    if (chosen == branches.size()) {
        throw ZeroNormBranch("parity measurement on an empty state");
    }

    PolState::Amplitudes kept;
    for (const auto &[label, amp] : state.amplitudes()) {
        if (branch_of(label) == chosen) kept.emplace(label, amp);
    }

    std::vector<double> hypotheses;
    hypotheses.reserve(branches.size());
    for (const auto &b : branches) hypotheses.push_back(b.phase);

    const Branch &truth = branches[chosen];
    const ProbeState shifted = displace_probe(ProbeState{probe.amplitude, 0.0}, truth.phase);
    const Discrimination read = discriminate(shifted, hypotheses, model, rng);
    // Ideal readout is exact even when branches share a phase (chi = 0).
    const size_t reported = model.mode == HomodyneModel::Mode::kIdeal ? chosen : read.index;

    return QndRecord{
        ParityOutcome{branches[reported].klass, truth.phase, truth.probability},
        truth.klass,
        PolState(state.modes(), std::move(kept)),
        read.error_probability,
    };
}

}  // namespace microkerr

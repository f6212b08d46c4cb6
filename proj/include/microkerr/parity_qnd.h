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

#ifndef MICROKERR_PARITY_QND_H
#define MICROKERR_PARITY_QND_H

#include <array>
#include <string_view>

#include "microkerr/kerr_readout.h"
#include "microkerr/pol_state.h"
#include "microkerr/random_stream.h"

namespace microkerr {

/// Outcome classes of the two-photon polarization parity detector, named by
/// the joint state they herald. The H component of each signal photon is
/// routed into a storage resonator, so the probe phase counts H photons:
/// VV -> theta_0, HV/VH -> theta_1, HH -> theta_2.
enum class ParityClass { kEvenVV = 0, kOdd = 1, kEvenHH = 2 };

const char *to_string(ParityClass c);
int h_count(ParityClass c);

struct ParityOutcome {
    ParityClass klass;   ///< Class reported by the homodyne readout.
    double probe_phase;  ///< Cascaded phase of the branch that occurred.
    double probability;  ///< Born probability of that branch.
};

struct QndRecord {
    ParityOutcome outcome;
    ParityClass true_class;  ///< Branch that drove the physics.
    PolState collapsed;      ///< Signal state projected onto the true branch.
    double homodyne_error;   ///< Analytic misclassification probability.
};

/// theta_0, theta_1, theta_2 for two identical channels.
std::array<double, 3> parity_phases(const KerrChannel &ch);

/// Nearest of theta_0, theta_1, theta_2 on the circle.
ParityClass classify_phase(double measured, const KerrChannel &ch);

/// Born probabilities of the three classes for the photons in `m1`, `m2`.
std::array<double, 3> class_probabilities(const PolState &state, std::string_view m1, std::string_view m2);

/// Parity measurement with a probe that passes both readout resonators.
///
/// The joint branch is sampled by the Born rule over configurations that give
/// the same probe phase; the signal collapses onto that branch without
/// distinguishing HV from VH. The probe is then read out with `model`, and the
/// resulting class, right or wrong, is what gets reported.
QndRecord parity_measure(const PolState &state, std::string_view m1, std::string_view m2, const KerrChannel &ch,
                         const ProbeState &probe, const HomodyneModel &model, RandomStream &rng);

/// Same, with distinct channels on the two arms. When the channels differ, HV
/// and VH imprint different phases and become separate branches.
QndRecord parity_measure(const PolState &state, std::string_view m1, std::string_view m2, const KerrChannel &ch1,
                         const KerrChannel &ch2, const ProbeState &probe, const HomodyneModel &model,
                         RandomStream &rng);

}  // namespace microkerr

#endif  // MICROKERR_PARITY_QND_H

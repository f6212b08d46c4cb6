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

#ifndef MICROKERR_UNITS_H
#define MICROKERR_UNITS_H

#include <cmath>
#include <numbers>

namespace microkerr {

// Energies and frequencies are ordinary frequencies in GHz (E/h, the "X/2pi"
// figure). Decay rates are inverse lifetimes in 1/ns. Angular rates, where a
// formula mixes the two, are rad/ns.

constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Elementary charge [C] and Planck constant [J s], exact SI values.
constexpr double kElementaryCharge = 1.602176634e-19;
constexpr double kPlanck = 6.62607015e-34;

/// GHz -> rad/ns.
constexpr double angular_rate(double ghz) { return kTwoPi * ghz; }

/// Maps any angle onto the principal branch (-pi, pi].
inline double wrap_phase(double radians) {
    double r = std::remainder(radians, kTwoPi);
    if (r <= -std::numbers::pi) {
        r += kTwoPi;
    }
    return r;
}

/// Shortest signed distance a - b on the circle, in (-pi, pi].
inline double circular_difference(double a, double b) { return wrap_phase(a - b); }

}  // namespace microkerr

#endif  // MICROKERR_UNITS_H

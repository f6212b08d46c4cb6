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

#ifndef MICROKERR_KERR_READOUT_H
#define MICROKERR_KERR_READOUT_H

#include <complex>
#include <cstddef>
#include <span>

#include "microkerr/random_stream.h"

namespace microkerr {

/// Reflection response of one readout resonator coupled by cross-Kerr to a
/// storage resonator.
struct KerrChannel {
    double chi = 0.0;     ///< Cross-Kerr coefficient, rad/ns (angular).
    double kappa2 = 0.1;  ///< Readout resonator decay, 1/ns.
    double kappa1 = 0.0;  ///< Storage resonator decay, 1/ns. Diagnostic only.

    /// chi given as chi/2pi in GHz; decays given as lifetimes.
    static KerrChannel from_lifetimes(double chi_ghz, double kappa2_inv_ns, double kappa1_inv_us);

    /// kappa2 / (|chi| n_max). Infinite for chi = 0.
    double validity_ratio(int n_max) const;
    /// kappa2 >= factor * |chi| * n_max. Reported, never enforced.
    bool in_linear_regime(int n_max, double factor = 5.0) const;

    bool operator==(const KerrChannel &) const = default;
};

/// r = (i chi n - kappa2/2) / (i chi n + kappa2/2).
std::complex<double> reflection(int n, const KerrChannel &ch);

/// arg(1/r) on the principal branch (-pi, pi]; pi for n = 0.
double phase_shift(int n, const KerrChannel &ch);

/// theta_n - theta_0, wrapped.
double differential_phase(int n, const KerrChannel &ch);

/// Phase picked up by a probe passing the two readout resonators in series.
double cascaded_phase(int n1, int n2, const KerrChannel &ch1, const KerrChannel &ch2);

struct ProbeState {
    std::complex<double> amplitude{40.0, 0.0};
    double accumulated_phase = 0.0;
};

ProbeState displace_probe(const ProbeState &probe, double total_phase);

struct HomodyneModel {
    enum class Mode { kIdeal, kGaussian };
    Mode mode = Mode::kIdeal;
    double quadrature_variance = 1.0;  ///< X = a + a^dagger, vacuum variance 1.
};

struct Discrimination {
    size_t index;               ///< Chosen hypothesis.
    size_t true_index;          ///< Hypothesis nearest the probe's actual phase.
    double error_probability;   ///< Analytic misclassification bound.
    double measured_x;          ///< Sampled quadrature; mean value in ideal mode.
};

/// Upper standard-normal tail Q(x) = P(Z > x).
double normal_tail(double x);

/// X-quadrature mean 2|alpha| cos(theta + arg alpha_in) for hypothesis theta.
double quadrature_mean(const ProbeState &probe, double hypothesis);

/// X-homodyne discrimination of a phase-shifted probe among candidate phases.
///
/// `probe` is the probe after displacement: its accumulated phase is the true
/// shift. Ideal mode returns the true hypothesis with zero error. Gaussian
/// mode samples X ~ N(2 Re(amplitude), 1), picks the nearest hypothesis mean,
/// and reports sum_j Q(|m_true - m_j| / 2) clamped to 1 (exact for two
/// hypotheses). Throws IndistinguishableHypotheses in gaussian mode when two
/// means agree within 1e-9, InvalidParameter when `hypotheses` is empty or
/// the probe amplitude is zero.
Discrimination discriminate(const ProbeState &probe, std::span<const double> hypotheses,
                            const HomodyneModel &model, RandomStream &rng);

}  // namespace microkerr

#endif  // MICROKERR_KERR_READOUT_H

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

#include "microkerr/kerr_readout.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "microkerr/errors.h"
#include "microkerr/units.h"

namespace microkerr {

KerrChannel KerrChannel::from_lifetimes(double chi_ghz, double kappa2_inv_ns, double kappa1_inv_us) {
    if (!(kappa2_inv_ns > 0.0) || !(kappa1_inv_us > 0.0)) {
        throw InvalidParameter("resonator lifetimes must be positive");
    }
    KerrChannel ch;
    ch.chi = angular_rate(chi_ghz);
    ch.kappa2 = 1.0 / kappa2_inv_ns;
    ch.kappa1 = 1.0 / (kappa1_inv_us * 1e3);
    return ch;
}

double KerrChannel::validity_ratio(int n_max) const {
    const double scale = std::abs(chi) * n_max;
    if (scale == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return kappa2 / scale;
}

bool KerrChannel::in_linear_regime(int n_max, double factor) const { return validity_ratio(n_max) >= factor; }

std::complex<double> reflection(int n, const KerrChannel &ch) {
    const std::complex<double> shift{0.0, ch.chi * n};
    const double half = ch.kappa2 / 2.0;
    return (shift - half) / (shift + half);
}

double phase_shift(int n, const KerrChannel &ch) {
    // 1/r computed directly rather than inverting r.
    const std::complex<double> shift{0.0, ch.chi * n};
    const double half = ch.kappa2 / 2.0;
    return wrap_phase(std::arg((shift + half) / (shift - half)));
}

double differential_phase(int n, const KerrChannel &ch) { return wrap_phase(phase_shift(n, ch) - phase_shift(0, ch)); }

double cascaded_phase(int n1, int n2, const KerrChannel &ch1, const KerrChannel &ch2) {
    return wrap_phase(phase_shift(n1, ch1) + phase_shift(n2, ch2));
}

ProbeState displace_probe(const ProbeState &probe, double total_phase) {
    ProbeState out;
    out.amplitude = probe.amplitude * std::polar(1.0, total_phase);
    out.accumulated_phase = wrap_phase(probe.accumulated_phase + total_phase);
    return out;
}

double normal_tail(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

double quadrature_mean(const ProbeState &probe, double hypothesis) {
    const double input_arg = std::arg(probe.amplitude) - probe.accumulated_phase;
    return 2.0 * std::abs(probe.amplitude) * std::cos(hypothesis + input_arg);
}

Discrimination discriminate(const ProbeState &probe, std::span<const double> hypotheses, const HomodyneModel &model,
                            RandomStream &rng) {
    if (hypotheses.empty()) {
        throw InvalidParameter("discriminate needs at least one hypothesis");
    }
    if (std::abs(probe.amplitude) == 0.0) {
        throw InvalidParameter("probe amplitude must be nonzero");
    }

    size_t true_index = 0;
    double best = std::numeric_limits<double>::infinity();
    for (size_t k = 0; k < hypotheses.size(); ++k) {
        const double d = std::abs(circular_difference(hypotheses[k], probe.accumulated_phase));
        if (d < best) {
            best = d;
            true_index = k;
        }
    }

    Discrimination out{};
    out.true_index = true_index;
    if (model.mode == HomodyneModel::Mode::kIdeal) {
        out.index = true_index;
        out.error_probability = 0.0;
        out.measured_x = 2.0 * probe.amplitude.real();
        return out;
    }

    std::vector<double> means(hypotheses.size());
    for (size_t k = 0; k < hypotheses.size(); ++k) {
        means[k] = quadrature_mean(probe, hypotheses[k]);
    }
    for (size_t i = 0; i < means.size(); ++i) {
        for (size_t j = i + 1; j < means.size(); ++j) {
            if (std::abs(means[i] - means[j]) < 1e-9) {
                throw IndistinguishableHypotheses("homodyne hypotheses have coincident X-quadrature means");
            }
        }
    }

    const double sigma = std::sqrt(model.quadrature_variance);
    out.measured_x = 2.0 * probe.amplitude.real() + sigma * rng.normal();

    double closest = std::numeric_limits<double>::infinity();
    for (size_t k = 0; k < means.size(); ++k) {
        const double d = std::abs(out.measured_x - means[k]);
        if (d < closest) {
            closest = d;
            out.index = k;
        }
    }

    double bound = 0.0;
    for (size_t k = 0; k < means.size(); ++k) {
        if (k != true_index) {
            bound += normal_tail(std::abs(means[true_index] - means[k]) / (2.0 * sigma));
        }
    }
    out.error_probability = std::min(bound, 1.0);
    return out;
}

}  // namespace microkerr

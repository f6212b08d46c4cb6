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

#include "microkerr/molecule_model.h"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include "microkerr/errors.h"
#include "microkerr/units.h"

namespace microkerr {

namespace {

void require(bool condition, const char *what) {
    if (!condition) {
        throw InvalidParameter(what);
    }
}

double ratio_or_inf(double num, double den) {
    if (num == 0.0) {
        return 0.0;
    }
    if (den == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return std::abs(num / den);
}

}  // namespace

void DeviceParams::validate() const {
    for (double v : {e_c, e_j, e_m, e_jm, g1, g2, omega_c, delta2}) {
        require(std::isfinite(v), "device parameters must be finite");
    }
    require(e_c > 0.0, "e_c must be positive");
    require(e_j > 0.0, "e_j must be positive");
    require(e_m >= 0.0, "e_m must be non-negative");
    require(e_jm >= 0.0, "e_jm must be non-negative");
    require(g1 >= 0.0, "g1 must be non-negative");
    require(g2 >= 0.0, "g2 must be non-negative");
    require(omega_c > 0.0, "omega_c must be positive");
    require(delta2 != 0.0, "delta2 must be nonzero");
}

ChargingEnergies derive_energies(const CapacitanceSet &caps) {
    require(caps.c_g1 > 0.0 && caps.c_g2 > 0.0 && caps.c_j > 0.0 && caps.c_m >= 0.0,
            "capacitances must be positive");
    // The qubits are identical; asymmetric gate capacitors break E_c1 = E_c2.
    require(caps.c_g1 == caps.c_g2, "gate capacitances must match (identical qubits)");

    const double c_sigma = caps.c_g1 + caps.c_j + caps.c_m;
    const double det = c_sigma * c_sigma - caps.c_m * caps.c_m;
    if (!(det > 0.0)) {
        throw DegenerateCapacitance("C_Sigma^2 - C_m^2 must be positive");
    }
    // e^2 / h expressed in GHz * fF.
    constexpr double kChargeScale = kElementaryCharge * kElementaryCharge / kPlanck * 1e15 * 1e-9;

    ChargingEnergies out{};
    out.e_c = kChargeScale * c_sigma / (2.0 * det);
    out.e_m = kChargeScale * caps.c_m / det;
    out.e_jm = 2.0 * caps.e_jc * std::cos(std::numbers::pi * caps.phi_ec);
    return out;
}

double MoleculeSpectrum::level(int i) const {
    if (i < 1 || i > 4) {
        throw InvalidParameter("level index must be in 1..4");
    }
    return levels[static_cast<size_t>(i - 1)];
}

MoleculeSpectrum spectrum(const DeviceParams &p) {
    p.validate();
    if (p.e_c >= p.e_j) {
        std::ostringstream msg;
        msg << "transmon regime check failed: E_c (" << p.e_c << " GHz) must be below E_J (" << p.e_j << " GHz)";
        throw OutOfRegime(msg.str());
    }

    MoleculeSpectrum s;
    s.alpha = std::pow(2.0 * p.e_c / p.e_j, 0.25);
    s.omega = std::sqrt(8.0 * p.e_c * p.e_j) - p.e_c;

    const double a2 = s.alpha * s.alpha;
    const double damp = std::exp(-a2);
    s.e_m1 = damp * p.e_jm * a2 * a2 / 4.0;
    s.e_m_plus = p.e_jm * a2 * damp + p.e_m / a2;
    s.e_m_minus = p.e_jm * a2 * damp - p.e_m / a2;
    s.theta_mix = std::atan(s.e_m_minus / s.omega) / 2.0;

    const double radius = std::hypot(s.omega, s.e_m_minus);
    s.levels = {
        -s.e_m1 - radius,
        s.e_m1 - s.e_m_plus,
        s.e_m1 + s.e_m_plus,
        -s.e_m1 + radius,
    };

    for (size_t k = 0; k + 1 < s.levels.size(); ++k) {
        if (s.levels[k] > s.levels[k + 1]) {
            std::ostringstream msg;
            msg << "level ordering violated: E" << k + 1 << " = " << s.levels[k] << " GHz exceeds E" << k + 2
                << " = " << s.levels[k + 1] << " GHz";
            throw OutOfRegime(msg.str());
        }
    }
    return s;
}

double level_spacing(const MoleculeSpectrum &s, int i, int j) { return s.level(i) - s.level(j); }

std::array<std::array<double, 4>, 4> eigenvectors(double theta_mix) {
    const double c = std::cos(theta_mix);
    const double sn = std::sin(theta_mix);
    const double h = std::numbers::sqrt2 / 2.0;
    return {{
        {c, 0.0, 0.0, -sn},
        {0.0, h, -h, 0.0},
        {0.0, h, h, 0.0},
        {sn, 0.0, 0.0, c},
    }};
}

double cross_kerr_chi(const DeviceParams &p) {
    p.validate();
    return -(p.g1 * p.g1) * (p.g2 * p.g2) / (p.delta2 * p.omega_c * p.omega_c);
}

AdiabaticReport check_adiabatic(const DeviceParams &p, const AdiabaticMargins &margins) {
    AdiabaticReport r{};
    const double pump = ratio_or_inf(p.g1, p.omega_c);
    r.pump_ratio_sq = pump * pump;
    r.detuning_ratio = ratio_or_inf(p.g2, p.delta2);
    r.pump_ok = r.pump_ratio_sq <= margins.max_pump_ratio_sq;
    r.detuning_ok = r.detuning_ratio <= margins.max_detuning_ratio;
    return r;
}

double tlr_frequency(const TlrParams &t) {
    require(t.length_mm > 0.0 && t.inductance_per_m > 0.0 && t.capacitance_per_m > 0.0,
            "resonator length, inductance and capacitance must be positive");
    const double length_m = t.length_mm * 1e-3;
    return 1.0 / (length_m * std::sqrt(t.inductance_per_m * t.capacitance_per_m)) * 1e-9;
}

}  // namespace microkerr

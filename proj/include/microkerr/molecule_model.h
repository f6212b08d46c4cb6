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

#ifndef MICROKERR_MOLECULE_MODEL_H
#define MICROKERR_MOLECULE_MODEL_H

#include <array>

namespace microkerr {

/// Parameters of the coupled-transmon molecule and its two resonators.
/// All values are frequencies in GHz.
struct DeviceParams {
    double e_c = 0.5;      ///< Cooper-pair charging energy.
    double e_j = 16.0;     ///< Flux-adjusted qubit Josephson energy.
    double e_m = 0.2;      ///< Capacitive qubit-qubit coupling.
    double e_jm = 0.0;     ///< Coupling-SQUID Josephson energy.
    double g1 = 0.3;       ///< Storage resonator coupling.
    double g2 = 0.3;       ///< Readout resonator coupling.
    double omega_c = 1.5;  ///< Classical pump strength.
    double delta2 = 1.5;   ///< Detuning E_42 - omega_B.

    /// Throws InvalidParameter on a sign or finiteness violation. The
    /// transmon-regime condition e_c < e_j is checked by `spectrum`.
    void validate() const;
};

/// Capacitive layout of the two qubits. Capacitances in fF, flux biases in
/// units of the flux quantum.
struct CapacitanceSet {
    double c_g1 = 0.0;
    double c_g2 = 0.0;
    double c_j = 0.0;
    double c_m = 0.0;
    double e_jc = 0.0;  ///< GHz, single coupling-SQUID junction.
    double phi_e1 = 0.0;
    double phi_e2 = 0.0;
    double phi_ec = 0.0;
};

struct ChargingEnergies {
    double e_c;
    double e_m;
    double e_jm;  ///< Follows the sign of cos(pi Phi_ec); may be negative.
};

/// Charging, coupling and SQUID energies of a symmetric qubit pair.
/// Throws InvalidParameter for non-positive capacitances or asymmetric gate
/// capacitors, DegenerateCapacitance when C_Sigma^2 <= C_m^2.
ChargingEnergies derive_energies(const CapacitanceSet &caps);

/// Closed-form four-level spectrum of the molecule in the two-level
/// (transmon) approximation.
struct MoleculeSpectrum {
    std::array<double, 4> levels{};  ///< E1..E4, GHz.
    double theta_mix = 0.0;          ///< Mixing angle of |1>, |4>, radians.
    double alpha = 0.0;              ///< (2 E_c / E_J)^(1/4).
    double omega = 0.0;              ///< sqrt(8 E_c E_J) - E_c.
    double e_m1 = 0.0;
    double e_m_plus = 0.0;
    double e_m_minus = 0.0;

    /// Level E_i for i in 1..4.
    double level(int i) const;
};

MoleculeSpectrum spectrum(const DeviceParams &p);

/// E_i - E_j, with 1-based level indices.
double level_spacing(const MoleculeSpectrum &s, int i, int j);

/// Eigenvectors |1>..|4> as rows, in the product basis
/// (up-up, up-down, down-up, down-down).
std::array<std::array<double, 4>, 4> eigenvectors(double theta_mix);

/// Effective cross-Kerr coefficient -g1^2 g2^2 / (delta2 Omega_c^2), GHz.
double cross_kerr_chi(const DeviceParams &p);

struct AdiabaticMargins {
    double max_pump_ratio_sq = 0.05;   ///< Bound on |g1/Omega_c|^2.
    double max_detuning_ratio = 0.25;  ///< Bound on |g2/delta2|.
};

struct AdiabaticReport {
    double pump_ratio_sq;
    double detuning_ratio;
    bool pump_ok;
    bool detuning_ok;

    bool ok() const { return pump_ok && detuning_ok; }
};

/// Never throws; degenerate denominators yield an infinite ratio.
AdiabaticReport check_adiabatic(const DeviceParams &p, const AdiabaticMargins &margins = {});

struct TlrParams {
    double length_mm;
    double inductance_per_m;   ///< H/m
    double capacitance_per_m;  ///< F/m
};

/// Resonator mode frequency omega/2pi = 1/(L sqrt(F c)), in GHz.
double tlr_frequency(const TlrParams &t);

}  // namespace microkerr

#endif  // MICROKERR_MOLECULE_MODEL_H

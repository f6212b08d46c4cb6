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

#ifndef MICROKERR_REPORTS_H
#define MICROKERR_REPORTS_H

#include <ostream>
#include <string>
#include <vector>

#include "microkerr/concentration.h"
#include "microkerr/config.h"
#include "microkerr/csv.h"

namespace microkerr {

/// `quantity,value` rows: levels, spacings, chi, adiabatic ratios and the
/// readout/storage diagnostics. Throws OutOfRegime for a bad device.
CsvTable device_report(const RunConfig &config);

/// Columns ejm_ratio,e31_ghz,e32_ghz,e31_minus_e42_ghz,chi_mhz over `points`
/// evenly spaced values of E_Jm/E_J in [0, 1].
CsvTable device_sweep(const RunConfig &config, int points);

/// Columns n,theta_rad,delta_theta_rad for n = 0..n_max.
CsvTable phase_table(const RunConfig &config, int n_max = 4);

struct RunReport {
    BatchResult batch;
    CsvTable summary;  ///< quantity,value
    CsvTable trials;   ///< trial,kept,qnd_class,v_count,branch,fidelity
};

RunReport run_report(const RunConfig &config);

/// Sweep keys and their columns:
///   x_sq:        x_sq,trials,successes,success_rate,analytic_rate,sigma,z_score
///   ejm_ratio:   as device_sweep
///   probe_alpha: probe_alpha,misclassification,empirical_error_rate,success_rate
///                (gaussian homodyne regardless of config)
/// Grid: from, from + step, ... up to `to` inclusive. Throws ConfigError on an
/// unknown key or an empty grid.
CsvTable sweep_table(const RunConfig &config);

std::vector<double> sweep_grid(double from, double to, double step);

/// Worst analytic misclassification among the three parity classes for a
/// probe of real amplitude `alpha`.
double worst_parity_misclassification(const KerrChannel &ch, double alpha);

}  // namespace microkerr

#endif  // MICROKERR_REPORTS_H

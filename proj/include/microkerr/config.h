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

#ifndef MICROKERR_CONFIG_H
#define MICROKERR_CONFIG_H

#include <cstdint>
#include <istream>
#include <string>

#include "microkerr/kerr_readout.h"
#include "microkerr/molecule_model.h"

namespace microkerr {

/// Everything a CLI command needs. Defaults are the published operating
/// point, so a missing config file reproduces the reference device.
struct RunConfig {
    DeviceParams device{0.5, 16.0, 0.2, 8.0, 0.3, 0.3, 1.5, 1.5};

    double kappa2_inv_ns = 10.0;
    double kappa1_inv_us = 20.0;
    double probe_alpha = 40.0;
    HomodyneModel::Mode homodyne_mode = HomodyneModel::Mode::kIdeal;
    double t_meas_ns = 100.0;

    double x_sq = 0.5;
    int n_parties = 2;
    uint64_t trials = 100000;
    uint64_t seed = 1;
    unsigned threads = 1;

    std::string csv;
    int verbosity = 0;
    int precision = 6;

    std::string sweep_key = "x_sq";
    double sweep_from = 0.1;
    double sweep_to = 0.9;
    double sweep_step = 0.1;
    int ejm_sweep_points = 0;  ///< 0 disables the device sweep table.
};

/// Parses `key = value` lines; `#` starts a comment. Unknown keys, malformed
/// values and out-of-range values throw ConfigError naming `source` and the
/// line number. Keys not present keep the values already in `base`.
RunConfig parse_config(std::istream &in, const std::string &source, RunConfig base = {});
RunConfig load_config(const std::string &path, RunConfig base = {});

/// Writes every key with its current value, in parse_config syntax.
std::string render_config(const RunConfig &config);

/// Readout channel for the configured device. Uses |chi|: the sign of chi
/// only mirrors the reflection phase and leaves the classification unchanged.
KerrChannel readout_channel(const RunConfig &config);
ProbeState probe_state(const RunConfig &config);
HomodyneModel homodyne_model(const RunConfig &config);

}  // namespace microkerr

#endif  // MICROKERR_CONFIG_H

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

#include "microkerr/reports.h"

#include <algorithm>
#include <cmath>

#include "microkerr/errors.h"
#include "microkerr/molecule_model.h"
#include "microkerr/parity_qnd.h"

namespace microkerr {

namespace {

std::vector<std::string> spectrum_row(const RunConfig &config, double ratio, int precision) {
    DeviceParams p = config.device;
    p.e_jm = ratio * p.e_j;
    const MoleculeSpectrum s = spectrum(p);
    const double e31 = level_spacing(s, 3, 1);
    const double e42 = level_spacing(s, 4, 2);
    return {
        format_number(ratio, precision),
        format_number(e31, precision),
        format_number(level_spacing(s, 3, 2), precision),
        format_number(e31 - e42, precision),
        format_number(std::abs(cross_kerr_chi(p)) * 1e3, precision),
    };
}

const char *flag(bool b) { return b ? "1" : "0"; }

}  // namespace

CsvTable device_report(const RunConfig &config) {
    const int prec = config.precision;
    const MoleculeSpectrum s = spectrum(config.device);
    const double chi = cross_kerr_chi(config.device);
    const AdiabaticReport adiabatic = check_adiabatic(config.device);
    const KerrChannel ch = readout_channel(config);

    CsvTable t{{"quantity", "value"}, {}};
    auto add = [&](const char *name, double v) { t.rows.push_back({name, format_number(v, prec)}); };
    add("e1_ghz", s.level(1));
    add("e2_ghz", s.level(2));
    add("e3_ghz", s.level(3));
    add("e4_ghz", s.level(4));
    add("e31_ghz", level_spacing(s, 3, 1));
    add("e32_ghz", level_spacing(s, 3, 2));
    add("e31_minus_e42_ghz", level_spacing(s, 3, 1) - level_spacing(s, 4, 2));
    add("theta_mix_rad", s.theta_mix);
    add("chi_signed_mhz", chi * 1e3);
    add("chi_mhz", std::abs(chi) * 1e3);
    add("pump_ratio_sq", adiabatic.pump_ratio_sq);
    t.rows.push_back({"pump_ok", flag(adiabatic.pump_ok)});
    add("detuning_ratio", adiabatic.detuning_ratio);
    t.rows.push_back({"detuning_ok", flag(adiabatic.detuning_ok)});
    // kappa2 / (|chi| n_max) with at most two photons in the readout path.
    add("readout_validity_ratio", ch.validity_ratio(2));
    add("storage_hold_ratio", config.t_meas_ns * ch.kappa1);
    return t;
}

CsvTable device_sweep(const RunConfig &config, int points) {
    if (points < 2) {
        throw ConfigError("device sweep needs at least 2 points");
    }
    CsvTable t{{"ejm_ratio", "e31_ghz", "e32_ghz", "e31_minus_e42_ghz", "chi_mhz"}, {}};
    for (int i = 0; i < points; ++i) {
        const double ratio = static_cast<double>(i) / (points - 1);
        t.rows.push_back(spectrum_row(config, ratio, config.precision));
    }
    return t;
}

CsvTable phase_table(const RunConfig &config, int n_max) {
    const KerrChannel ch = readout_channel(config);
    CsvTable t{{"n", "theta_rad", "delta_theta_rad"}, {}};
    for (int n = 0; n <= n_max; ++n) {
        t.rows.push_back({std::to_string(n), format_number(phase_shift(n, ch), config.precision),
                          format_number(differential_phase(n, ch), config.precision)});
    }
    return t;
}

RunReport run_report(const RunConfig &config) {
    const SourceSpec src = SourceSpec::from_x_sq(config.x_sq, config.n_parties);
    const BatchConfig batch{config.trials, config.seed, config.threads, true};
    RunReport r{run_batch(src, readout_channel(config), probe_state(config), homodyne_model(config), batch), {}, {}};

    const int prec = config.precision;
    const RunStats &s = r.batch.stats;
    r.summary = CsvTable{{"quantity", "value"}, {}};
    r.summary.rows = {
        {"trials", std::to_string(s.trials)},
        {"successes", std::to_string(s.successes)},
        {"success_rate", format_number(s.success_rate, prec)},
        {"analytic_rate", format_number(s.analytic_rate, prec)},
        {"mean_fidelity", format_number(s.mean_fidelity, prec)},
        {"seed", std::to_string(s.seed)},
        {"homodyne_mismatches", std::to_string(s.homodyne_mismatches)},
        {"mean_homodyne_error", format_number(s.mean_homodyne_error, prec)},
    };

    r.trials = CsvTable{{"trial", "kept", "qnd_class", "v_count", "branch", "fidelity"}, {}};
    r.trials.rows.reserve(r.batch.records.size());
    for (const auto &rec : r.batch.records) {
        r.trials.rows.push_back({std::to_string(rec.trial), rec.kept ? "1" : "0", to_string(rec.qnd_class),
                                 std::to_string(rec.v_count), rec.branch ? to_string(*rec.branch) : "none",
                                 format_number(rec.fidelity, prec)});
    }
    return r;
}

std::vector<double> sweep_grid(double from, double to, double step) {
    if (!(step > 0.0) || !(to >= from)) {
        throw ConfigError("sweep range must satisfy from <= to with a positive step");
    }
    const auto count = static_cast<long>(std::floor((to - from) / step + 1e-9)) + 1;
    std::vector<double> grid;
    grid.reserve(static_cast<size_t>(count));
    for (long i = 0; i < count; ++i) {
        grid.push_back(from + static_cast<double>(i) * step);
    }
    return grid;
}

double worst_parity_misclassification(const KerrChannel &ch, double alpha) {
    const auto phases = parity_phases(ch);
    double worst = 0.0;
    for (size_t t = 0; t < phases.size(); ++t) {
        double bound = 0.0;
        for (size_t k = 0; k < phases.size(); ++k) {
            if (k == t) continue;
            const double d = 2.0 * alpha * std::abs(std::cos(phases[t]) - std::cos(phases[k]));
            bound += normal_tail(d / 2.0);
        }
        worst = std::max(worst, std::min(bound, 1.0));
    }
    return worst;
}

CsvTable sweep_table(const RunConfig &config) {
    const auto grid = sweep_grid(config.sweep_from, config.sweep_to, config.sweep_step);
    const int prec = config.precision;
    const std::string &key = config.sweep_key;

    if (key == "ejm_ratio") {
        CsvTable t{{"ejm_ratio", "e31_ghz", "e32_ghz", "e31_minus_e42_ghz", "chi_mhz"}, {}};
        for (double ratio : grid) t.rows.push_back(spectrum_row(config, ratio, prec));
        return t;
    }

    if (key == "x_sq") {
        CsvTable t{{"x_sq", "trials", "successes", "success_rate", "analytic_rate", "sigma", "z_score"}, {}};
        for (double x_sq : grid) {
            if (x_sq < 0.0 || x_sq > 1.0 + 1e-12) {
                throw ConfigError("x_sq sweep must stay within [0, 1]");
            }
            const SourceSpec src = SourceSpec::from_x_sq(std::min(x_sq, 1.0), config.n_parties);
            const BatchConfig batch{config.trials, config.seed, config.threads, false};
            const RunStats s =
                run_batch(src, readout_channel(config), probe_state(config), homodyne_model(config), batch).stats;
            const double p = s.analytic_rate;
            const double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(s.trials));
            const double z = sigma > 0.0 ? (s.success_rate - p) / sigma : 0.0;
            t.rows.push_back({format_number(x_sq, prec), std::to_string(s.trials), std::to_string(s.successes),
                              format_number(s.success_rate, prec), format_number(p, prec),
                              format_number(sigma, prec), format_number(z, prec)});
        }
        return t;
    }

    if (key == "probe_alpha") {
        const KerrChannel ch = readout_channel(config);
        const SourceSpec src = SourceSpec::from_x_sq(config.x_sq, config.n_parties);
        const HomodyneModel model{HomodyneModel::Mode::kGaussian, 1.0};
        CsvTable t{{"probe_alpha", "misclassification", "empirical_error_rate", "success_rate"}, {}};
        for (double alpha : grid) {
            if (!(alpha > 0.0)) {
                throw ConfigError("probe_alpha sweep must stay positive");
            }
            const BatchConfig batch{config.trials, config.seed, config.threads, false};
            const RunStats s = run_batch(src, ch, ProbeState{{alpha, 0.0}, 0.0}, model, batch).stats;
            t.rows.push_back({format_number(alpha, prec), format_number(worst_parity_misclassification(ch, alpha), prec),
                              format_number(static_cast<double>(s.homodyne_mismatches) / static_cast<double>(s.trials),
                                            prec),
                              format_number(s.success_rate, prec)});
        }
        return t;
    }

    throw ConfigError("unknown sweep key '" + key + "' (expected x_sq, ejm_ratio or probe_alpha)");
}

}  // namespace microkerr

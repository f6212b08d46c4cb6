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

#include "microkerr/config.h"

#include <cerrno>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "microkerr/errors.h"

namespace microkerr {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

double parse_double(const std::string &v) {
    double out = 0.0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size() || !std::isfinite(out)) {
        throw std::invalid_argument("expected a finite number, got '" + v + "'");
    }
    return out;
}

uint64_t parse_u64(const std::string &v) {
    uint64_t out = 0;
    const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc{} || ptr != v.data() + v.size()) {
        throw std::invalid_argument("expected a non-negative integer, got '" + v + "'");
    }
    return out;
}

void check(bool ok, const char *message) {
    if (!ok) throw std::invalid_argument(message);
}

using Setter = std::function<void(RunConfig &, const std::string &)>;

Setter positive(double RunConfig::*field) {
    return [field](RunConfig &c, const std::string &v) {
        const double x = parse_double(v);
        check(x > 0.0, "must be positive");
        c.*field = x;
    };
}

Setter device_field(double DeviceParams::*field, bool strictly_positive, bool nonzero = false) {
    return [=](RunConfig &c, const std::string &v) {
        const double x = parse_double(v);
        if (nonzero) {
            check(x != 0.0, "must be nonzero");
        } else if (strictly_positive) {
            check(x > 0.0, "must be positive");
        } else {
            check(x >= 0.0, "must be non-negative");
        }
        c.device.*field = x;
    };
}

const std::map<std::string, Setter> &setters() {
    static const std::map<std::string, Setter> table = {
        {"e_c_ghz", device_field(&DeviceParams::e_c, true)},
        {"e_j_ghz", device_field(&DeviceParams::e_j, true)},
        {"e_m_ghz", device_field(&DeviceParams::e_m, false)},
        {"e_jm_ghz", device_field(&DeviceParams::e_jm, false)},
        {"g1_ghz", device_field(&DeviceParams::g1, false)},
        {"g2_ghz", device_field(&DeviceParams::g2, false)},
        {"omega_c_ghz", device_field(&DeviceParams::omega_c, true)},
        {"delta2_ghz", device_field(&DeviceParams::delta2, false, true)},
        {"kappa2_inv_ns", positive(&RunConfig::kappa2_inv_ns)},
        {"kappa1_inv_us", positive(&RunConfig::kappa1_inv_us)},
        {"probe_alpha", positive(&RunConfig::probe_alpha)},
        {"t_meas_ns", positive(&RunConfig::t_meas_ns)},
        {"homodyne_mode",
         [](RunConfig &c, const std::string &v) {
             if (v == "ideal") {
                 c.homodyne_mode = HomodyneModel::Mode::kIdeal;
             } else if (v == "gaussian") {
                 c.homodyne_mode = HomodyneModel::Mode::kGaussian;
             } else {
                 throw std::invalid_argument("must be 'ideal' or 'gaussian', got '" + v + "'");
             }
         }},
        {"x_sq",
         [](RunConfig &c, const std::string &v) {
             const double x = parse_double(v);
             check(x >= 0.0 && x <= 1.0, "must lie in [0, 1]");
             c.x_sq = x;
         }},
        {"n_parties",
         [](RunConfig &c, const std::string &v) {
             const uint64_t n = parse_u64(v);
             check(n >= 2 && n <= 16, "must lie in 2..16");
             c.n_parties = static_cast<int>(n);
         }},
        {"trials",
         [](RunConfig &c, const std::string &v) {
             const uint64_t n = parse_u64(v);
             check(n >= 1, "must be at least 1");
             c.trials = n;
         }},
        {"seed", [](RunConfig &c, const std::string &v) { c.seed = parse_u64(v); }},
        {"threads",
         [](RunConfig &c, const std::string &v) {
             const uint64_t n = parse_u64(v);
             check(n >= 1 && n <= 1024, "must lie in 1..1024");
             c.threads = static_cast<unsigned>(n);
         }},
        {"csv", [](RunConfig &c, const std::string &v) { c.csv = v; }},
        {"verbosity",
         [](RunConfig &c, const std::string &v) {
             const uint64_t n = parse_u64(v);
             check(n <= 2, "must lie in 0..2");
             c.verbosity = static_cast<int>(n);
         }},
        {"precision",
         [](RunConfig &c, const std::string &v) {
             const uint64_t n = parse_u64(v);
             check(n >= 1 && n <= 17, "must lie in 1..17");
             c.precision = static_cast<int>(n);
         }},
        {"sweep_key", [](RunConfig &c, const std::string &v) { c.sweep_key = v; }},
        {"sweep_from", [](RunConfig &c, const std::string &v) { c.sweep_from = parse_double(v); }},
        {"sweep_to", [](RunConfig &c, const std::string &v) { c.sweep_to = parse_double(v); }},
        {"sweep_step", positive(&RunConfig::sweep_step)},
        {"ejm_sweep_points",
         [](RunConfig &c, const std::string &v) {
             const uint64_t n = parse_u64(v);
             check(n == 0 || (n >= 2 && n <= 100000), "must be 0 or lie in 2..100000");
             c.ejm_sweep_points = static_cast<int>(n);
         }},
    };
    return table;
}

std::string number(double v) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, ptr);
}

}  // namespace

RunConfig parse_config(std::istream &in, const std::string &source, RunConfig base) {
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        const std::string body = trim(hash == std::string::npos ? line : line.substr(0, hash));
        if (body.empty()) continue;

        auto fail = [&](const std::string &what) {
            throw ConfigError(source + " line " + std::to_string(line_no) + ": " + what);
        };
        const auto eq = body.find('=');
        if (eq == std::string::npos) fail("expected 'key = value'");
        const std::string key = trim(body.substr(0, eq));
        const std::string value = trim(body.substr(eq + 1));
        const auto it = setters().find(key);
        if (it == setters().end()) fail("unknown key '" + key + "'");
        if (value.empty() && key != "csv") fail("missing value for '" + key + "'");
        try {
            it->second(base, value);
        } catch (const std::invalid_argument &e) {
            fail(key + " " + e.what());
        }
    }
    return base;
}

RunConfig load_config(const std::string &path, RunConfig base) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    return parse_config(in, path, std::move(base));
}

std::string render_config(const RunConfig &c) {
    std::ostringstream o;
    o << "# device, GHz\n"
      << "e_c_ghz = " << number(c.device.e_c) << "\n"
      << "e_j_ghz = " << number(c.device.e_j) << "\n"
      << "e_m_ghz = " << number(c.device.e_m) << "\n"
      << "e_jm_ghz = " << number(c.device.e_jm) << "\n"
      << "g1_ghz = " << number(c.device.g1) << "\n"
      << "g2_ghz = " << number(c.device.g2) << "\n"
      << "omega_c_ghz = " << number(c.device.omega_c) << "\n"
      << "delta2_ghz = " << number(c.device.delta2) << "\n"
      << "# readout\n"
      << "kappa2_inv_ns = " << number(c.kappa2_inv_ns) << "\n"
      << "kappa1_inv_us = " << number(c.kappa1_inv_us) << "\n"
      << "probe_alpha = " << number(c.probe_alpha) << "\n"
      << "homodyne_mode = " << (c.homodyne_mode == HomodyneModel::Mode::kIdeal ? "ideal" : "gaussian") << "\n"
      << "t_meas_ns = " << number(c.t_meas_ns) << "\n"
      << "# protocol\n"
      << "x_sq = " << number(c.x_sq) << "\n"
      << "n_parties = " << c.n_parties << "\n"
      << "trials = " << c.trials << "\n"
      << "seed = " << c.seed << "\n"
      << "threads = " << c.threads << "\n"
      << "# output\n"
      << "csv = " << c.csv << "\n"
      << "verbosity = " << c.verbosity << "\n"
      << "precision = " << c.precision << "\n"
      << "# sweeps\n"
      << "sweep_key = " << c.sweep_key << "\n"
      << "sweep_from = " << number(c.sweep_from) << "\n"
      << "sweep_to = " << number(c.sweep_to) << "\n"
      << "sweep_step = " << number(c.sweep_step) << "\n"
      << "ejm_sweep_points = " << c.ejm_sweep_points << "\n";
    return o.str();
}

KerrChannel readout_channel(const RunConfig &config) {
    const double chi_ghz = std::abs(cross_kerr_chi(config.device));
    return KerrChannel::from_lifetimes(chi_ghz, config.kappa2_inv_ns, config.kappa1_inv_us);
}

ProbeState probe_state(const RunConfig &config) { return ProbeState{{config.probe_alpha, 0.0}, 0.0}; }

HomodyneModel homodyne_model(const RunConfig &config) { return HomodyneModel{config.homodyne_mode, 1.0}; }

}  // namespace microkerr

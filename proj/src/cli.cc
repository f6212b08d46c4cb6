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

#include "microkerr/cli.h"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "microkerr/config.h"
#include "microkerr/csv.h"
#include "microkerr/errors.h"
#include "microkerr/reports.h"

namespace microkerr {

namespace {

struct Overrides {
    std::string config_path;
    std::optional<std::string> csv;
    std::optional<uint64_t> seed;
    std::optional<uint64_t> trials;
    std::optional<int> precision;
    std::optional<unsigned> threads;
    std::optional<int> sweep_points;
    std::optional<std::string> key;
    std::optional<double> from;
    std::optional<double> to;
    std::optional<double> step;
};

void add_common(CLI::App *cmd, Overrides &o) {
    cmd->add_option("--config", o.config_path, "Config file (key = value); falls back to $MICROKERR_CONFIG");
    cmd->add_option("--csv", o.csv, "Write the CSV table to this path");
    cmd->add_option("--seed", o.seed, "Random seed");
    cmd->add_option("--trials", o.trials, "Trials per run or per sweep point")->check(CLI::PositiveNumber);
    cmd->add_option("--precision", o.precision, "Decimals in CSV output; 17 = exact round-trip")
        ->check(CLI::Range(1, 17));
    cmd->add_option("--threads", o.threads, "Worker threads")->check(CLI::Range(1u, 1024u));
}

RunConfig resolve(const Overrides &o) {
    RunConfig config;
    std::string path = o.config_path;
    if (path.empty()) {
        if (const char *env = std::getenv("MICROKERR_CONFIG"); env && *env) path = env;
    }
    if (!path.empty()) config = load_config(path);
    if (o.csv) config.csv = *o.csv;
    if (o.seed) config.seed = *o.seed;
    if (o.trials) config.trials = *o.trials;
    if (o.precision) config.precision = *o.precision;
    if (o.threads) config.threads = *o.threads;
    if (o.sweep_points) config.ejm_sweep_points = *o.sweep_points;
    if (o.key) config.sweep_key = *o.key;
    if (o.from) config.sweep_from = *o.from;
    if (o.to) config.sweep_to = *o.to;
    if (o.step) config.sweep_step = *o.step;
    return config;
}

void emit(const CsvTable &table, const std::string &path, std::ostream &out) {
    if (path.empty()) {
        write_csv(out, table);
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        throw ConfigError("cannot open csv output '" + path + "'");
    }
    write_csv(file, table);
    if (!file) {
        throw ConfigError("failed writing csv output '" + path + "'");
    }
}

}  // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Cross-Kerr parity QND and microwave-photon entanglement concentration simulator", "microkerr"};
    app.require_subcommand(1);
    Overrides o;

    auto *device = app.add_subcommand("device", "Molecule spectrum, cross-Kerr coefficient and validity checks");
    add_common(device, o);
    device->add_option("--sweep-points", o.sweep_points, "Also tabulate N points of E_Jm/E_J over [0, 1]")
        ->check(CLI::Range(2, 100000));

    auto *phases = app.add_subcommand("phases", "Probe phase shift versus stored photon number");
    add_common(phases, o);

    auto *run = app.add_subcommand("run", "Monte Carlo run of the concentration protocol");
    add_common(run, o);

    auto *sweep = app.add_subcommand("sweep", "Parameter sweep: x_sq, ejm_ratio or probe_alpha");
    add_common(sweep, o);
    sweep->add_option("--key", o.key, "Swept parameter");
    sweep->add_option("--from", o.from, "First grid value");
    sweep->add_option("--to", o.to, "Last grid value (inclusive)");
    sweep->add_option("--step", o.step, "Grid step");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp &e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    }

    try {
        const RunConfig config = resolve(o);
        if (config.verbosity > 0) {
            err << render_config(config);
        }

        if (device->parsed()) {
            write_csv(out, device_report(config));
            if (config.ejm_sweep_points > 0) {
                const CsvTable table = device_sweep(config, config.ejm_sweep_points);
                if (config.csv.empty()) out << "\n";
                emit(table, config.csv, out);
            }
        } else if (phases->parsed()) {
            emit(phase_table(config), config.csv, out);
        } else if (run->parsed()) {
            const RunReport report = run_report(config);
            write_csv(out, report.summary);
            if (!config.csv.empty()) emit(report.trials, config.csv, out);
        } else if (sweep->parsed()) {
            emit(sweep_table(config), config.csv, out);
        }
    } catch (const ConfigError &e) {
        err << "error: config: " << e.what() << "\n";
        return kExitConfig;
    } catch (const InvalidParameter &e) {
        err << "error: config: " << e.what() << "\n";
        return kExitConfig;
    } catch (const OutOfRegime &e) {
        err << "error: regime: " << e.what() << "\n";
        return kExitRegime;
    } catch (const IndistinguishableHypotheses &e) {
        err << "error: regime: " << e.what() << "\n";
        return kExitRegime;
    } catch (const std::exception &e) {
        err << "error: internal: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitOk;
}

}  // namespace microkerr

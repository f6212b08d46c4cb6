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

// Acceptance gate. Prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "microkerr/cli.h"
#include "microkerr/concentration.h"
#include "microkerr/kerr_readout.h"
#include "microkerr/molecule_model.h"
#include "microkerr/parity_qnd.h"
#include "microkerr/pol_state.h"
#include "microkerr/units.h"
#include "oracles.h"

using namespace microkerr;
using microkerr::testing::rel_close;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string &what) {
        if (!ok && pass) {
            pass = false;
            detail = what;
        }
    }
};

std::string fmt(const char *f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

DeviceParams reference_device(double ejm_ratio = 0.5) {
    DeviceParams p{0.5, 16.0, 0.2, 0.0, 0.3, 0.3, 1.5, 1.5};
    p.e_jm = ejm_ratio * p.e_j;
    return p;
}

KerrChannel reference_channel() { return KerrChannel::from_lifetimes(2.4e-3, 10.0, 20.0); }

const HomodyneModel kIdeal{};
const HomodyneModel kGaussian{HomodyneModel::Mode::kGaussian, 1.0};

Verdict cross_kerr() {
    Verdict v;
    const double chi = cross_kerr_chi(reference_device());
    v.require(rel_close(std::abs(chi), 2.4e-3, 1e-12), "|chi| = " + fmt("%.17g", std::abs(chi)) + " GHz");
    v.detail = v.pass ? "|chi|/2pi = " + fmt("%.12f", std::abs(chi) * 1e3) + " MHz" : v.detail;
    return v;
}

Verdict spectrum_bands() {
    Verdict v;
    double lo31 = 1e9, hi31 = -1e9, lo32 = 1e9, hi32 = -1e9, lod = 1e9, hid = -1e9;
    const int points = 1001;
    for (int k = 0; k < points; ++k) {
        const auto s = spectrum(reference_device(static_cast<double>(k) / (points - 1)));
        const double e31 = level_spacing(s, 3, 1);
        const double e32 = level_spacing(s, 3, 2);
        const double d = e31 - level_spacing(s, 4, 2);
        lo31 = std::min(lo31, e31), hi31 = std::max(hi31, e31);
        lo32 = std::min(lo32, e32), hi32 = std::max(hi32, e32);
        lod = std::min(lod, d), hid = std::max(hid, d);
    }
    v.require(lo31 >= 8.0 && hi31 <= 12.5, "E31 range " + fmt("%.6f", lo31) + ".." + fmt("%.6f", hi31));
    v.require(lo32 >= 1.0 && hi32 <= 8.0, "E32 range " + fmt("%.6f", lo32) + ".." + fmt("%.6f", hi32));
    v.require(lod >= 0.0 && hid <= 1.0, "E31-E42 range " + fmt("%.6f", lod) + ".." + fmt("%.6f", hid));

    // Endpoints against arbitrary-precision values of the closed forms.
    const auto s0 = spectrum(reference_device(0.0));
    const auto s1 = spectrum(reference_device(1.0));
    v.require(rel_close(level_spacing(s0, 3, 1), 8.3425459892532309305, 1e-9), "E31 at E_Jm = 0");
    v.require(rel_close(level_spacing(s0, 3, 2), 1.6, 1e-9), "E32 at E_Jm = 0");
    v.require(std::abs(level_spacing(s0, 3, 1) - level_spacing(s0, 4, 2)) < 1e-12, "E31-E42 at E_Jm = 0");
    v.require(rel_close(level_spacing(s1, 3, 1), 12.153817850347585365, 1e-9), "E31 at E_Jm = E_J");
    v.require(rel_close(level_spacing(s1, 3, 2), 7.830406264571238946, 1e-9), "E32 at E_Jm = E_J");
    v.require(rel_close(level_spacing(s1, 3, 1) - level_spacing(s1, 4, 2), 0.77880078307140486825, 1e-9),
              "E31-E42 at E_Jm = E_J");
    if (v.pass) {
        v.detail = "E31 " + fmt("%.4f", lo31) + ".." + fmt("%.4f", hi31) + ", E32 " + fmt("%.4f", lo32) + ".." +
                   fmt("%.4f", hi32) + ", E31-E42 " + fmt("%.4f", lod) + ".." + fmt("%.4f", hid) + " GHz";
    }
    return v;
}

Verdict spectrum_identities() {
    Verdict v;
    std::mt19937_64 gen(7);
    double worst = 0.0, worst_ratio = 0.0;
    int exceeded = 0;
    const int draws = 1000;
    for (int draw = 0; draw < draws; ++draw) {
        const DeviceParams p = microkerr::testing::random_device(gen);
        const auto s = spectrum(p);
        const double em1 = s.e_m1;
        const double r = std::hypot(s.omega, s.e_m_minus);
        const double lhs[3] = {s.level(2) + s.level(3), s.level(4) - s.level(1),
                               level_spacing(s, 3, 1) - level_spacing(s, 4, 2)};
        const double rhs[3] = {2.0 * em1, 2.0 * r, 4.0 * em1};
        double draw_worst = 0.0;
        for (int i = 0; i < 3; ++i) {
            const double rel = rhs[i] == 0.0 ? std::abs(lhs[i]) : std::abs(lhs[i] - rhs[i]) / std::abs(rhs[i]);
            draw_worst = std::max(draw_worst, rel);
        }
        exceeded += draw_worst > 1e-12;
        if (draw_worst > worst) {
            worst = draw_worst;
            worst_ratio = p.e_jm / p.e_j;
        }
    }
    v.require(worst <= 1e-12, "worst relative residual " + fmt("%.3e", worst) + " at E_Jm/E_J = " +
                                  fmt("%.2e", worst_ratio) + ", " + std::to_string(exceeded) + " of " +
                                  std::to_string(draws) + " draws above 1e-12");
    if (v.pass) v.detail = std::to_string(draws) + " draws, worst relative residual " + fmt("%.3e", worst);
    return v;
}

Verdict phase_law() {
    Verdict v;
    const KerrChannel ch = reference_channel();
    double worst = 0.0;
    for (int n = 0; n <= 5; ++n) {
        const double law = microkerr::testing::arctan_phase_law(n, ch.chi, ch.kappa2);
        worst = std::max(worst, std::abs(circular_difference(differential_phase(n, ch), law)));
    }
    v.require(worst <= 1e-12, "phase law residual " + fmt("%.3e", worst));
    const double d1 = differential_phase(1, ch);
    v.require(std::abs(d1 - 0.585826) <= 1e-4, "delta theta(1) = " + fmt("%.9f", d1));
    double worst_mod = 0.0;
    for (int n = 0; n <= 100; ++n) worst_mod = std::max(worst_mod, std::abs(std::abs(reflection(n, ch)) - 1.0));
    v.require(worst_mod <= 1e-14, "|r| - 1 = " + fmt("%.3e", worst_mod));
    if (v.pass) {
        v.detail = "law residual " + fmt("%.2e", worst) + ", delta theta(1) = " + fmt("%.6f", d1) +
                   " rad, max ||r|-1| " + fmt("%.2e", worst_mod);
    }
    return v;
}

Verdict parity_truth_table() {
    Verdict v;
    const KerrChannel ch = reference_channel();
    const ProbeState probe{};
    const auto phases = parity_phases(ch);
    const std::vector<std::string> modes{"a", "b"};
    const PolState odd(modes, {{"HV", {0.6, 0.0}}, {"VH", {0.0, 0.8}}});
    struct Row {
        PolState in;
        ParityClass klass;
        double phase;
    };
    const std::vector<Row> rows{{PolState::basis(modes, "HH"), ParityClass::kEvenHH, phases[2]},
                                {PolState::basis(modes, "VV"), ParityClass::kEvenVV, phases[0]},
                                {odd, ParityClass::kOdd, phases[1]}};
    for (uint64_t seed = 0; seed < 100; ++seed) {
        for (const auto &row : rows) {
            RandomStream rng(seed);
            const auto r = parity_measure(row.in, "a", "b", ch, probe, kIdeal, rng);
            v.require(r.outcome.klass == row.klass, std::string("class ") + to_string(r.outcome.klass));
            v.require(r.outcome.probe_phase == row.phase, "probe phase " + fmt("%.17g", r.outcome.probe_phase));
            v.require(std::abs(r.outcome.probability - 1.0) <= 1e-12, "probability");
            v.require(fidelity(r.collapsed, row.in) >= 1.0 - 1e-12, "post-measurement fidelity");
        }
    }
    if (v.pass) v.detail = "HH->theta2, VV->theta0, HV/VH->theta1, input preserved";
    return v;
}

struct RateCheck {
    double rate;
    double expected;
    double z;
};

RateCheck rate_check(uint64_t successes, uint64_t trials, double p) {
    const double rate = static_cast<double>(successes) / static_cast<double>(trials);
    const double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
    return {rate, p, sigma > 0.0 ? (rate - p) / sigma : (rate == p ? 0.0 : 1e9)};
}

Verdict two_party_rate() {
    Verdict v;
    double worst_z = 0.0, worst_f = 0.0;
    for (int k = 1; k <= 9; ++k) {
        const double x_sq = k / 10.0;
        const auto src = SourceSpec::from_x_sq(x_sq, 2);
        const auto result = run_batch(src, reference_channel(), ProbeState{}, kIdeal,
                                      BatchConfig{100000, 1000 + static_cast<uint64_t>(k), 1, true});
        const auto c = rate_check(result.stats.successes, result.stats.trials, src.analytic_rate());
        worst_z = std::max(worst_z, std::abs(c.z));
        v.require(std::abs(c.z) <= 4.0, "x^2 = " + fmt("%.1f", x_sq) + " z = " + fmt("%.2f", c.z));
        for (const auto &rec : result.records) {
            if (rec.kept) worst_f = std::max(worst_f, std::abs(rec.fidelity - 1.0));
        }
    }
    v.require(worst_f <= 1e-10, "fidelity deviation " + fmt("%.3e", worst_f));
    if (v.pass) v.detail = "max |z| " + fmt("%.2f", worst_z) + ", max |F-1| " + fmt("%.2e", worst_f);
    return v;
}

Verdict ghz_extension() {
    Verdict v;
    double worst_z = 0.0, worst_f = 0.0;
    uint64_t even = 0, odd = 0;
    for (double x_sq : {0.2, 0.5, 0.8}) {
        const auto src = SourceSpec::from_x_sq(x_sq, 3);
        const KerrChannel ch = reference_channel();
        uint64_t kept = 0;
        const uint64_t trials = 100000;
        for (uint64_t i = 0; i < trials; ++i) {
            RandomStream rng(static_cast<uint64_t>(x_sq * 1000), i);
            const auto t = run_trial(src, ch, ProbeState{}, kIdeal, rng);
            if (!t.kept) continue;
            ++kept;
            const bool even_v = t.v_count % 2 == 0;
            (even_v ? even : odd) += 1;
            const bool branch_ok = t.branch && (*t.branch == CoincidenceBranch::kPlus) == even_v;
            v.require(branch_ok, "coincidence branch disagrees with V parity");
            worst_f = std::max({worst_f, std::abs(t.pre_correction_fidelity - 1.0), std::abs(t.final_fidelity - 1.0)});
        }
        const auto c = rate_check(kept, trials, src.analytic_rate());
        worst_z = std::max(worst_z, std::abs(c.z));
        v.require(std::abs(c.z) <= 4.0, "x^2 = " + fmt("%.1f", x_sq) + " z = " + fmt("%.2f", c.z));
    }
    v.require(even > 0 && odd > 0, "both coincidence parities must occur");
    v.require(worst_f <= 1e-10, "fidelity deviation " + fmt("%.3e", worst_f));
    if (v.pass) {
        v.detail = "max |z| " + fmt("%.2f", worst_z) + ", " + std::to_string(even) + " Phi+ / " +
                   std::to_string(odd) + " Phi- branches, max |F-1| " + fmt("%.2e", worst_f);
    }
    return v;
}

Verdict oracle_equivalence() {
    Verdict v;
    double worst = 0.0;
    int replays = 0;
    for (int n : {2, 3}) {
        for (uint64_t i = 0; i < 1000; ++i) {
            const auto src = SourceSpec::from_x_sq(0.1 + 0.8 * static_cast<double>(i % 9) / 8.0, n);
            RandomStream rng(77 + n, i);
            const auto t = run_trial(src, reference_channel(), ProbeState{}, kIdeal, rng);
            const DenseState dense = oracle_replay(src, t.transcript);
            const DenseState sparse = DenseState::from_sparse(t.final_state);
            if (dense.modes() != sparse.modes()) {
                v.require(false, "mode registers differ");
                continue;
            }
            for (size_t k = 0; k < dense.amplitudes().size(); ++k) {
                worst = std::max(worst, std::abs(dense.amplitudes()[k] - sparse.amplitudes()[k]));
            }
            ++replays;
        }
    }
    v.require(worst <= 1e-10, "amplitude deviation " + fmt("%.3e", worst));
    if (v.pass) v.detail = std::to_string(replays) + " replays, max amplitude deviation " + fmt("%.2e", worst);
    return v;
}

Verdict homodyne_noise() {
    Verdict v;
    const KerrChannel ch = reference_channel();
    const auto th = parity_phases(ch);
    const double hyps[2] = {th[0], th[1]};
    // Probe sized so the mean separation is 2, giving an error near Q(1).
    const double alpha = 1.0 / std::abs(std::cos(th[0]) - std::cos(th[1]));
    const double expected = microkerr::testing::q_tail(1.0);
    const uint64_t samples = 1000000;
    uint64_t wrong = 0;
    RandomStream rng(2718);
    for (uint64_t i = 0; i < samples; ++i) {
        const size_t truth = i % 2;
        const ProbeState probe{{alpha, 0.0}, hyps[truth]};
        const auto d = discriminate(probe, hyps, kGaussian, rng);
        wrong += d.index != truth;
        if (i == 0) v.require(std::abs(d.error_probability - expected) < 1e-12, "analytic error value");
    }
    const auto c = rate_check(wrong, samples, expected);
    v.require(std::abs(c.z) <= 4.0, "misclassification " + fmt("%.6f", c.rate) + " z = " + fmt("%.2f", c.z));

    const auto src = SourceSpec::from_x_sq(0.5, 2);
    const auto run = run_batch(src, ch, ProbeState{}, kGaussian, BatchConfig{1000000, 31415, 1, false});
    v.require(run.stats.homodyne_mismatches == 0,
              std::to_string(run.stats.homodyne_mismatches) + " readout errors at alpha = 40");
    if (v.pass) {
        v.detail = "rate " + fmt("%.6f", c.rate) + " vs " + fmt("%.6f", expected) + " (z " + fmt("%.2f", c.z) +
                   "), 0 errors in 10^6 trials at alpha = 40";
    }
    return v;
}

std::string slurp(const std::filesystem::path &p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Verdict determinism() {
    Verdict v;
    const auto dir = std::filesystem::temp_directory_path() / "microkerr_acceptance";
    std::filesystem::create_directories(dir);
    std::vector<std::string> csvs, summaries;
    for (const char *threads : {"1", "2", "8"}) {
        const auto path = (dir / (std::string("run_") + threads + ".csv")).string();
        const char *argv[] = {"microkerr", "run",       "--trials", "100000", "--seed", "99",
                              "--threads", threads,     "--csv",    path.c_str(), "--precision", "17"};
        std::ostringstream out, err;
        const int code = run_cli(static_cast<int>(std::size(argv)), argv, out, err);
        v.require(code == 0, "run exited " + std::to_string(code) + ": " + err.str());
        csvs.push_back(slurp(path));
        summaries.push_back(out.str());
    }
    v.require(!csvs[0].empty(), "empty csv");
    v.require(csvs[0] == csvs[1] && csvs[0] == csvs[2], "trial csv differs across partitions");
    v.require(summaries[0] == summaries[1] && summaries[0] == summaries[2], "summary differs across partitions");
    if (v.pass) v.detail = "1/2/8 threads byte-identical (" + std::to_string(csvs[0].size()) + " bytes)";
    return v;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char *, std::function<Verdict()>>> criteria{
        {"cross-Kerr coefficient", cross_kerr},
        {"spectrum bands", spectrum_bands},
        {"spectrum identities", spectrum_identities},
        {"phase-shift law", phase_law},
        {"parity truth table", parity_truth_table},
        {"two-party success probability", two_party_rate},
        {"GHZ extension", ghz_extension},
        {"oracle equivalence", oracle_equivalence},
        {"homodyne noise model", homodyne_noise},
        {"determinism", determinism},
    };
    int failures = 0;
    int index = 0;
    for (const auto &[name, run] : criteria) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = run();
        } catch (const std::exception &e) {
            v.pass = false;
            v.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        failures += !v.pass;
        std::printf("%s %2d %s: %s [%.2fs]\n", v.pass ? "PASS" : "FAIL", index, name, v.detail.c_str(), secs);
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}

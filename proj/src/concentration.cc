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

#include "microkerr/concentration.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <thread>

#include "microkerr/errors.h"

namespace microkerr {

SourceSpec SourceSpec::from_x_sq(double x_sq, int n_parties) {
    if (!(x_sq >= 0.0 && x_sq <= 1.0)) {
        throw InvalidParameter("x_sq must lie in [0, 1]");
    }
    return SourceSpec{std::sqrt(x_sq), std::sqrt(1.0 - x_sq), n_parties};
}

void SourceSpec::validate() const {
    if (n_parties < 2) {
        throw InvalidParameter("n_parties must be at least 2");
    }
    // Two copies of n photons; the dense reference indexes with size_t.
    if (n_parties > 16) {
        throw InvalidParameter("n_parties above 16 is not supported");
    }
    if (std::abs(std::norm(x) + std::norm(y) - 1.0) > 1e-10) {
        throw InvalidParameter("source coefficients must satisfy |x|^2 + |y|^2 = 1");
    }
}

double SourceSpec::analytic_rate() const { return 2.0 * std::norm(x) * std::norm(y); }

ProtocolLayout protocol_layout(int n_parties) {
    ProtocolLayout layout;
    if (n_parties == 2) {
        layout.modes = {"u1", "u2", "d1", "d2"};
        layout.qnd_first = "u2";
        layout.qnd_second = "d2";
        layout.rotated = {"d1", "d2"};
        layout.kept = {"u1", "u2"};
        layout.correction_mode = "u1";
        return layout;
    }
    for (int k = 1; k <= 2 * n_parties; ++k) {
        layout.modes.push_back(std::to_string(k));
    }
    for (int k = 1; k <= n_parties; ++k) {
        layout.kept.push_back(std::to_string(k));
        layout.rotated.push_back(std::to_string(n_parties + k));
    }
    layout.qnd_first = "2";
    layout.qnd_second = std::to_string(n_parties + 2);
    layout.correction_mode = "1";
    return layout;
}

std::vector<SourcePair> protocol_sources(const SourceSpec &src) {
    const ProtocolLayout layout = protocol_layout(src.n_parties);
    const auto half = static_cast<std::ptrdiff_t>(src.n_parties);
    return {
        SourcePair{src.x, src.y, {layout.modes.begin(), layout.modes.begin() + half}},
        SourcePair{src.x, src.y, {layout.modes.begin() + half, layout.modes.end()}},
    };
}

const char *to_string(Target t) { return t == Target::kPsiPlus ? "psi_plus" : "phi_plus"; }

const char *to_string(CoincidenceBranch b) { return b == CoincidenceBranch::kPlus ? "plus" : "minus"; }

CoincidenceBranch classify_coincidence(std::span<const DetectionEvent> detections, int n_parties) {
    if (n_parties < 2 || detections.size() != static_cast<size_t>(n_parties)) {
        throw IncompleteDetections("expected " + std::to_string(n_parties) + " detection events, got " +
                                   std::to_string(detections.size()));
    }
    const auto v = std::count_if(detections.begin(), detections.end(),
                                 [](const DetectionEvent &e) { return e.outcome == Pol::V; });
    return v % 2 == 0 ? CoincidenceBranch::kPlus : CoincidenceBranch::kMinus;
}

PolState cat_state(const std::vector<std::string> &modes, CoincidenceBranch branch) {
    const double h = 1.0 / std::numbers::sqrt2;
    const double sign = branch == CoincidenceBranch::kPlus ? 1.0 : -1.0;
    return PolState(modes, {{std::string(modes.size(), 'H'), sign * h}, {std::string(modes.size(), 'V'), h}});
}

TrialOutcome run_trial(const SourceSpec &src, const KerrChannel &ch, const ProbeState &probe,
                       const HomodyneModel &model, RandomStream &rng) {
    src.validate();
    const ProtocolLayout layout = protocol_layout(src.n_parties);
    const auto sources = protocol_sources(src);
    const PolState initial = product_state(sources);

    TrialOutcome out;
    out.target = src.n_parties == 2 ? Target::kPsiPlus : Target::kPhiPlus;

    QndRecord qnd = parity_measure(initial, layout.qnd_first, layout.qnd_second, ch, probe, model, rng);
    out.qnd_class = qnd.outcome.klass;
    out.homodyne_error = qnd.homodyne_error;
    out.transcript.true_class = qnd.true_class;
    out.transcript.reported_class = qnd.outcome.klass;

    if (qnd.outcome.klass != ParityClass::kOdd) {
        out.final_state = std::move(qnd.collapsed);
        return out;
    }
    out.kept = true;

    PolState state = std::move(qnd.collapsed);
    for (const auto &mode : layout.rotated) {
        state = rotate45(state, mode);
    }
    for (size_t k = 0; k < layout.rotated.size(); ++k) {
        Detection d = detect(state, layout.rotated[k], rng, static_cast<int>(k));
        out.transcript.outcomes.push_back(d.event.outcome);
        out.v_count += d.event.outcome == Pol::V;
        out.detections.push_back(std::move(d.event));
        state = std::move(d.state);
    }

    const CoincidenceBranch branch = classify_coincidence(out.detections, src.n_parties);
    out.branch = branch;
    out.pre_correction_fidelity = fidelity(state, cat_state(layout.kept, branch));
    if (branch == CoincidenceBranch::kMinus) {
        state = phase_flip(state, layout.correction_mode, Pol::H);
        out.corrected = true;
    }
    out.transcript.corrected = out.corrected;
    out.final_fidelity = fidelity(state, cat_state(layout.kept, CoincidenceBranch::kPlus));
    out.final_state = std::move(state);
    return out;
}

namespace {

struct TrialTally {
    TrialSummary summary;
    bool mismatch;
    double homodyne_error;
};

}  // namespace

BatchResult run_batch(const SourceSpec &src, const KerrChannel &ch, const ProbeState &probe,
                      const HomodyneModel &model, const BatchConfig &config) {
    src.validate();
    if (config.trials < 1) {
        throw InvalidParameter("a batch needs at least one trial");
    }
    const uint64_t n = config.trials;
    const unsigned workers = static_cast<unsigned>(std::clamp<uint64_t>(config.threads, 1, n));
    std::vector<TrialTally> tallies(n);
    std::vector<std::exception_ptr> errors(workers);

    auto work = [&](unsigned w) {
        const uint64_t begin = n * w / workers;
        const uint64_t end = n * (w + 1) / workers;
        try {
            for (uint64_t i = begin; i < end; ++i) {
                RandomStream rng(config.seed, i);
                const TrialOutcome t = run_trial(src, ch, probe, model, rng);
                tallies[i] = {TrialSummary{i, t.kept, t.qnd_class, t.v_count, t.branch, t.final_fidelity},
                              t.transcript.true_class != t.transcript.reported_class, t.homodyne_error};
            }
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };

    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(work, w);
        }
    }
    for (const auto &e : errors) {
        if (e) std::rethrow_exception(e);
    }

    BatchResult result;
    RunStats &s = result.stats;
    s.trials = n;
    s.seed = config.seed;
    s.analytic_rate = src.analytic_rate();
    double fidelity_sum = 0.0;
    double error_sum = 0.0;
    for (const auto &t : tallies) {
        if (t.summary.kept) {
            ++s.successes;
            fidelity_sum += t.summary.fidelity;
        }
        s.homodyne_mismatches += t.mismatch;
        error_sum += t.homodyne_error;
    }
    s.success_rate = static_cast<double>(s.successes) / static_cast<double>(n);
    s.mean_fidelity = s.successes > 0 ? fidelity_sum / static_cast<double>(s.successes) : 0.0;
    s.mean_homodyne_error = error_sum / static_cast<double>(n);

    if (config.keep_records) {
        result.records.reserve(n);
        for (const auto &t : tallies) result.records.push_back(t.summary);
    }
    return result;
}

DenseState oracle_replay(const SourceSpec &src, const Transcript &transcript) {
    src.validate();
    const ProtocolLayout layout = protocol_layout(src.n_parties);
    const auto sources = protocol_sources(src);

    DenseState dense = DenseState::from_sources(sources);
    dense.project_h_count(layout.qnd_first, layout.qnd_second, h_count(transcript.true_class));
    if (!(dense.norm_squared() > 0.0)) {
        throw TranscriptMismatch(std::string("parity branch ") + to_string(transcript.true_class) +
                                 " has zero amplitude");
    }
    dense.normalize();
    if (transcript.reported_class != ParityClass::kOdd) {
        return dense;
    }

    if (transcript.outcomes.size() != layout.rotated.size()) {
        throw TranscriptMismatch("transcript has the wrong number of detection outcomes");
    }
    for (const auto &mode : layout.rotated) {
        dense.rotate45(mode);
    }
    for (size_t k = 0; k < layout.rotated.size(); ++k) {
        dense.project(layout.rotated[k], transcript.outcomes[k]);
        if (!(dense.norm_squared() > 0.0)) {
            throw TranscriptMismatch("detection outcome on mode " + layout.rotated[k] + " has zero amplitude");
        }
    }
    DenseState reduced = dense.restrict_to(layout.rotated, transcript.outcomes);
    reduced.normalize();
    if (transcript.corrected) {
        reduced.phase_flip(layout.correction_mode, Pol::H);
    }
    return reduced;
}

}  // namespace microkerr

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

#ifndef MICROKERR_CONCENTRATION_H
#define MICROKERR_CONCENTRATION_H

#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "microkerr/dense_state.h"
#include "microkerr/kerr_readout.h"
#include "microkerr/parity_qnd.h"
#include "microkerr/pol_state.h"
#include "microkerr/random_stream.h"

namespace microkerr {

/// Two identical copies of x|H..H> + y|V..V> shared by n parties.
struct SourceSpec {
    std::complex<double> x{1.0, 0.0};
    std::complex<double> y{0.0, 0.0};
    int n_parties = 2;

    /// Real coefficients x = sqrt(x_sq), y = sqrt(1 - x_sq).
    static SourceSpec from_x_sq(double x_sq, int n_parties);

    /// Throws InvalidParameter.
    void validate() const;
    /// 2 |x|^2 |y|^2.
    double analytic_rate() const;
};

/// Where each photon sits. For two parties the modes are u1 u2 d1 d2; for
/// n >= 3 they are "1".."2n", party k holding k and n+k.
struct ProtocolLayout {
    std::vector<std::string> modes;
    std::string qnd_first;
    std::string qnd_second;
    std::vector<std::string> rotated;  ///< Second photon of each party.
    std::vector<std::string> kept;     ///< First photon of each party.
    std::string correction_mode;
};

ProtocolLayout protocol_layout(int n_parties);
std::vector<SourcePair> protocol_sources(const SourceSpec &src);

enum class Target { kPsiPlus, kPhiPlus };
enum class CoincidenceBranch { kPlus, kMinus };

const char *to_string(Target t);
const char *to_string(CoincidenceBranch b);

/// Even number of V outcomes -> kPlus, odd -> kMinus. Throws
/// IncompleteDetections unless there is exactly one event per party.
CoincidenceBranch classify_coincidence(std::span<const DetectionEvent> detections, int n_parties);

/// (|H..H> + s|V..V>)/sqrt2 over `modes`, with s = +1 for kPlus. The minus
/// state is written as (|V..V> - |H..H>)/sqrt2.
PolState cat_state(const std::vector<std::string> &modes, CoincidenceBranch branch);

/// Branch choices of one trial, enough to replay it deterministically.
struct Transcript {
    ParityClass true_class = ParityClass::kEvenVV;
    ParityClass reported_class = ParityClass::kEvenVV;
    std::vector<Pol> outcomes;  ///< One per rotated mode, in layout order.
    bool corrected = false;
};

struct TrialOutcome {
    bool kept = false;
    ParityClass qnd_class = ParityClass::kEvenVV;  ///< Reported class.
    std::vector<DetectionEvent> detections;
    bool corrected = false;
    double final_fidelity = 0.0;
    double pre_correction_fidelity = 0.0;  ///< Against the branch's cat state.
    Target target = Target::kPsiPlus;
    int v_count = 0;
    std::optional<CoincidenceBranch> branch;
    double homodyne_error = 0.0;
    Transcript transcript;
    PolState final_state;  ///< Kept photons after correction, or the collapsed state.
};

/// One round of the protocol: QND parity check on the party-2 photons, keep
/// on odd, rotate every second photon by 45 degrees, detect behind PBSs, and
/// flip the phase of the first party's H component on an odd V count.
TrialOutcome run_trial(const SourceSpec &src, const KerrChannel &ch, const ProbeState &probe,
                       const HomodyneModel &model, RandomStream &rng);

struct BatchConfig {
    uint64_t trials = 1;
    uint64_t seed = 1;
    unsigned threads = 1;
    bool keep_records = false;
};

struct RunStats {
    uint64_t trials = 0;
    uint64_t successes = 0;
    double success_rate = 0.0;
    double analytic_rate = 0.0;
    double mean_fidelity = 0.0;  ///< Over kept trials; 0 when none.
    uint64_t seed = 0;
    uint64_t homodyne_mismatches = 0;  ///< Reported class != true class.
    double mean_homodyne_error = 0.0;

    bool operator==(const RunStats &) const = default;
};

/// Per-trial row of a batch, mirroring the CSV record.
struct TrialSummary {
    uint64_t trial;
    bool kept;
    ParityClass qnd_class;
    int v_count;
    std::optional<CoincidenceBranch> branch;
    double fidelity;

    bool operator==(const TrialSummary &) const = default;
};

struct BatchResult {
    RunStats stats;
    std::vector<TrialSummary> records;  ///< Filled when keep_records is set.
};

/// Runs `trials` independent trials, trial i drawing from RandomStream(seed,
/// i). Workers take contiguous index blocks and the reduction runs in index
/// order, so the result does not depend on the thread count.
BatchResult run_batch(const SourceSpec &src, const KerrChannel &ch, const ProbeState &probe,
                      const HomodyneModel &model, const BatchConfig &config);

/// Replays `transcript` on the dense 2^(2n) reference. Returns the kept
/// photons' state for a kept trial, else the collapsed post-QND state.
/// Throws TranscriptMismatch when a recorded branch has zero amplitude.
DenseState oracle_replay(const SourceSpec &src, const Transcript &transcript);

}  // namespace microkerr

#endif  // MICROKERR_CONCENTRATION_H

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

#ifndef MICROKERR_DENSE_STATE_H
#define MICROKERR_DENSE_STATE_H

#include <complex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "microkerr/pol_state.h"

namespace microkerr {

/// Dense 2^k state vector over polarization modes. Reference arithmetic for
/// checking the sparse PolState pipeline; it shares no code with it.
///
/// Index bit (k-1-i) holds mode i, with 1 meaning V, so the first mode is the
/// most significant bit. Operations do not renormalize.
class DenseState {
   public:
    DenseState(std::vector<std::string> modes, std::vector<std::complex<double>> amplitudes);

    static DenseState from_sources(std::span<const SourcePair> sources);
    static DenseState from_sparse(const PolState &state);

    const std::vector<std::string> &modes() const { return modes_; }
    const std::vector<std::complex<double>> &amplitudes() const { return amps_; }

    std::complex<double> amplitude(std::string_view label) const;
    double norm_squared() const;

    void rotate45(std::string_view mode);
    void phase_flip(std::string_view mode, Pol which);
    /// Zeroes every component whose `mode` differs from `keep`. The mode
    /// stays in the register.
    void project(std::string_view mode, Pol keep);
    /// Keeps components whose H-count over `a` and `b` equals `h_count`.
    void project_h_count(std::string_view a, std::string_view b, int h_count);
    void normalize();

    /// Restriction to the complement of `measured`, which must already be
    /// projected onto `outcomes`. Not renormalized.
    DenseState restrict_to(std::span<const std::string> measured, std::span<const Pol> outcomes) const;

   private:
    size_t bit_of(std::string_view mode) const;

    std::vector<std::string> modes_;
    std::vector<std::complex<double>> amps_;
};

}  // namespace microkerr

#endif  // MICROKERR_DENSE_STATE_H

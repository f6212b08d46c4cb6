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

#ifndef MICROKERR_RANDOM_STREAM_H
#define MICROKERR_RANDOM_STREAM_H

#include <cstdint>
#include <random>

namespace microkerr {

/// A seeded random stream with portable uniform and normal draws.
///
/// The engine is std::mt19937_64, whose output sequence is fixed by the
/// standard. The conversions to doubles are done here rather than with
/// std::uniform_real_distribution / std::normal_distribution, whose outputs
/// differ between standard libraries. Streams for independent trials are
/// keyed by (seed, index) so that a batch can be split across workers in any
/// order without changing a single draw.
class RandomStream {
   public:
    explicit RandomStream(uint64_t seed);
    RandomStream(uint64_t seed, uint64_t stream_index);

    /// Uniform in [0, 1) with 53 random bits.
    double uniform();
    /// Standard normal via Box-Muller.
    double normal();

   private:
    std::mt19937_64 engine_;
};

/// splitmix64 finalizer.
uint64_t mix64(uint64_t x);

}  // namespace microkerr

#endif  // MICROKERR_RANDOM_STREAM_H

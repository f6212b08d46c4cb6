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

#ifndef MICROKERR_ERRORS_H
#define MICROKERR_ERRORS_H

#include <stdexcept>
#include <string>

namespace microkerr {

/// Base of every error thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A parameter violates a sign or finiteness invariant of its type.
struct InvalidParameter : Error {
    using Error::Error;
};

/// The device sits outside the regime where the closed-form spectrum holds
/// (E_c >= E_J, or the four levels come out of order).
struct OutOfRegime : Error {
    using Error::Error;
};

struct DegenerateCapacitance : Error {
    using Error::Error;
};

/// Two homodyne hypotheses have coincident X-quadrature means.
struct IndistinguishableHypotheses : Error {
    using Error::Error;
};

struct UnnormalizedInput : Error {
    using Error::Error;
};

struct UnknownMode : Error {
    using Error::Error;
};

/// Born sampling selected a projection with zero norm. Internal error.
struct ZeroNormBranch : Error {
    using Error::Error;
};

struct RegisterMismatch : Error {
    using Error::Error;
};

struct IncompleteDetections : Error {
    using Error::Error;
};

/// A recorded branch has zero amplitude when replayed on the dense reference.
struct TranscriptMismatch : Error {
    using Error::Error;
};

/// Malformed or out-of-range configuration input.
struct ConfigError : Error {
    using Error::Error;
};

}  // namespace microkerr

#endif  // MICROKERR_ERRORS_H

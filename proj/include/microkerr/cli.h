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

#ifndef MICROKERR_CLI_H
#define MICROKERR_CLI_H

#include <ostream>

namespace microkerr {

enum ExitCode : int {
    kExitOk = 0,
    kExitInternal = 1,
    kExitConfig = 2,
    kExitRegime = 3,
};

/// Entry point of the `microkerr` tool: subcommands device, phases, run and
/// sweep. Errors are reported on `err` as one line starting with "error:".
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace microkerr

#endif  // MICROKERR_CLI_H

// Copyright 2026 The asbell Authors
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

#ifndef ASBELL_CLI_H
#define ASBELL_CLI_H

#include <ostream>
#include <string>
#include <vector>

namespace asbell::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,
    kExitInvalidInput = 2,
    kExitAnomaly = 3,
    kExitResourceLimit = 4,
};

/// Runs one command. `args` excludes the program name. Results go to `out`,
/// diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace asbell::cli

#endif

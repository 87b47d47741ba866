// Copyright 2026 The Disassoc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DISASSOC_CLI_H_
#define DISASSOC_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace disassoc::cli {

// Process exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kViolations = 2;
inline constexpr int kStructural = 3;
inline constexpr int kUsage = 64;
inline constexpr int kIoError = 74;

// Runs one subcommand (anonymize, verify, reconstruct, metrics, synth).
// `args` excludes the program name. Reports go to `out`, diagnostics and
// the line-oriented log to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace disassoc::cli

#endif  // DISASSOC_CLI_H_

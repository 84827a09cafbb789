// Copyright 2026 The gpic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GPIC_CLI_H
#define GPIC_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

namespace gpic::cli {

inline constexpr int kExitOk = 0;
/// `validate` found a bound violation.
inline constexpr int kExitViolation = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitInfeasible = 3;
inline constexpr int kExitIoError = 4;

/// Runs the `gpic` command line. args excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace gpic::cli

#endif

// Copyright 2026 The hotc Authors
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


#ifndef HOT_CLI_HPP
#define HOT_CLI_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace hot {

inline constexpr std::string_view kDimsEnv = "HOTC_DIMS";

enum ExitCode : int { kExitOk = 0, kExitRejected = 1, kExitUsage = 2 };

/// Runs one command line; `args` excludes the program name.
///
///   hotc analyze TYPE
///   hotc check inclusion|equivalence X Y
///   hotc check contraction X --pairs A:B,...
///   hotc check composition X Y
///   hotc signalling X [--crosscheck]
///   hotc oracle verify X [--pairs ..] [--trials N] [--seed S] [--tol T]
///
/// Global flags: --json, --dims FILE (default taken from $HOTC_DIMS).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hot

#endif  // HOT_CLI_HPP

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


#ifndef HOT_REPORT_HPP
#define HOT_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hot/admissibility.hpp"
#include "hot/signalling.hpp"

namespace hot {

/// Keys keep insertion order so output is stable across runs.
using Json = nlohmann::ordered_json;

/// {admissible, reason, witness, result_in, result_out}
Json to_json(const Verdict& verdict);
/// {from, to, relation, enclosing}
Json to_json(const SignallingVerdict& row);

/// Output of one CLI command.
struct Report {
  std::string command;
  std::vector<std::string> input_types;
  /// Command-specific fields, appended after the common ones.
  Json body = Json::object();
  std::vector<std::string> notes;
  double timing_ms = 0;
  std::optional<std::uint64_t> seed;

  Json to_json() const;
};

}  // namespace hot

#endif  // HOT_REPORT_HPP

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


#include "hot/report.hpp"

namespace hot {

Json to_json(const Verdict& verdict) {
  Json j;
  j["admissible"] = verdict.admissible;
  j["reason"] = std::string(reason_name(verdict.reason));
  j["witness"] = verdict.witness ? Json(verdict.witness->to_string()) : Json(nullptr);
  if (verdict.result_io) {
    j["result_in"] = verdict.result_io->inputs;
    j["result_out"] = verdict.result_io->outputs;
  } else {
    j["result_in"] = nullptr;
    j["result_out"] = nullptr;
  }
  return j;
}

Json to_json(const SignallingVerdict& row) {
  Json j;
  j["from"] = row.from;
  j["to"] = row.to;
  j["relation"] = std::string(relation_name(row.relation));
  j["enclosing"] = render_type(row.enclosing, true);
  return j;
}

Json Report::to_json() const {
  Json j;
  j["command"] = command;
  j["input_types"] = input_types;
  if (seed) j["seed"] = *seed;
  for (const auto& [key, value] : body.items()) j[key] = value;
  if (!notes.empty()) j["notes"] = notes;
  j["timing_ms"] = timing_ms;
  return j;
}

}  // namespace hot

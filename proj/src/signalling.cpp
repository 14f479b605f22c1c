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


#include "hot/signalling.hpp"

#include <algorithm>
#include <stdexcept>

#include "hot/admissibility.hpp"

namespace hot {

std::string_view relation_name(Relation relation) {
  switch (relation) {
    case Relation::NoSignalling:
      return "no-signalling";
    case Relation::Signalling:
      return "signalling";
    case Relation::FullSignalling:
      return "full-signalling";
  }
  return "unknown";
}

SignallingVerdict signals(const TypeExpr& x, std::string_view from, std::string_view to) {
  if (k_value(x, from) != 1)
    throw std::invalid_argument("system '" + std::string(from) + "' is not an input");
  if (k_value(x, to) != 0)
    throw std::invalid_argument("system '" + std::string(to) + "' is not an output");
  SignallingVerdict verdict;
  verdict.from = std::string(from);
  verdict.to = std::string(to);
  verdict.enclosing = minimal_enclosing(x, from, to);
  verdict.relation =
      k_value(verdict.enclosing, from) == 1 ? Relation::FullSignalling : Relation::NoSignalling;
  return verdict;
}

bool full_signalling(const TypeExpr& x, std::string_view from, std::string_view to) {
  if (k_value(x, from) != 1 || k_value(x, to) != 0)
    throw std::invalid_argument("full_signalling needs an input and an output");
  return check_contraction_strings(bar(x), ContractionSpec{{std::string(to), std::string(from)}})
      .admissible;
}

std::vector<SignallingVerdict> signalling_matrix(const TypeExpr& x) {
  const IoAnalysis io = io_partition(x);
  std::vector<SignallingVerdict> rows;
  rows.reserve(io.inputs.size() * io.outputs.size());
  for (const Label& in : io.inputs)
    for (const Label& out : io.outputs) rows.push_back(signals(x, in.name, out.name));
  return rows;
}

std::vector<CrosscheckRow> crosscheck_rows(const TypeExpr& x) {
  std::vector<CrosscheckRow> rows;
  for (SignallingVerdict& verdict : signalling_matrix(x)) {
    CrosscheckRow row;
    row.contraction_admissible =
        check_contraction_strings(x, ContractionSpec{{verdict.from, verdict.to}}).admissible;
    row.agrees = (verdict.relation == Relation::NoSignalling) == row.contraction_admissible;
    row.verdict = std::move(verdict);
    rows.push_back(std::move(row));
  }
  return rows;
}

bool crosscheck(const TypeExpr& x) {
  const std::vector<CrosscheckRow> rows = crosscheck_rows(x);
  return std::all_of(rows.begin(), rows.end(), [](const CrosscheckRow& r) { return r.agrees; });
}

}  // namespace hot

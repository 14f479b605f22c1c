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


#ifndef HOT_ADMISSIBILITY_HPP
#define HOT_ADMISSIBILITY_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hot/type_expr.hpp"
#include "hot/word_set.hpp"

namespace hot {

enum class Reason {
  Ok,
  InputInput,
  OutputOutput,
  CriticalSetHit,
  LabelMismatch,
  LambdaMismatch,
  NotIncluded,
};

/// "ok", "input-input", "output-output", "critical-set-hit", ...
std::string_view reason_name(Reason reason);

struct IoSets {
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;

  friend bool operator==(const IoSets&, const IoSets&) = default;
};

/// Outcome of an inclusion or admissibility check.
///
/// `witness` is set on CriticalSetHit (a word of D_x inside the critical set)
/// and on NotIncluded (a word of D_x outside D_y). `result_io` is set exactly
/// when the check succeeds.
struct Verdict {
  bool admissible = false;
  Reason reason = Reason::Ok;
  std::optional<BitWord> witness;
  std::optional<IoSets> result_io;
  std::string detail;
};

/// x <= y: same systems, same lambda and D_x inside D_y.
Verdict check_inclusion(const TypeExpr& x, const TypeExpr& y);
/// Inclusion both ways; the first failing direction is reported.
Verdict check_equivalence(const TypeExpr& x, const TypeExpr& y);

/// C_H(x). Pairs may be given in either orientation. Throws
/// std::invalid_argument for unknown labels or a pair of unequal dimensions.
Verdict check_contraction(const TypeExpr& x, const ContractionSpec& h);

/// The string-set part of check_contraction alone. Dimensions of paired
/// systems are not compared, since D_x does not depend on them.
Verdict check_contraction_strings(const TypeExpr& x, const ContractionSpec& h);

/// x * y: contraction of x (x) y over the labels the two types share.
/// Labels are matched by name; shared labels must agree on dimension.
Verdict check_composition(const TypeExpr& x, const TypeExpr& y);

/// The tensor product and pair list check_composition reduces to.
struct CompositionSetup {
  TypeExpr product;
  ContractionSpec pairs;
  std::vector<Relabeling> renamed;
};
CompositionSetup composition_setup(const TypeExpr& x, const TypeExpr& y);

/// False only on a counterexample to "C_H inadmissible implies C_K
/// inadmissible". Requires h to be a subset of k.
bool check_monotonicity(const TypeExpr& x, const ContractionSpec& h, const ContractionSpec& k);

/// (x) (A'_i -> A_i) -> (in~ -> out~) for pairs (A_i input, A'_i output).
TypeExpr supermap_type(const TypeExpr& x, const ContractionSpec& h);

/// Decides C_H(x) as the inclusion x <= supermap_type(x, h).
Verdict supermap_inclusion_form(const TypeExpr& x, const ContractionSpec& h);

}  // namespace hot

#endif  // HOT_ADMISSIBILITY_HPP

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


#ifndef HOT_SIGNALLING_HPP
#define HOT_SIGNALLING_HPP

#include <string>
#include <string_view>
#include <vector>

#include "hot/type_expr.hpp"

namespace hot {

/// Pairwise relation from an input to an output. The type-level algorithm
/// only ever yields NoSignalling or FullSignalling; Signalling is kept for
/// numerically observed signalling that is not known to be full.
enum class Relation { NoSignalling, Signalling, FullSignalling };

/// "no-signalling", "signalling", "full-signalling".
std::string_view relation_name(Relation relation);

struct SignallingVerdict {
  std::string from;
  std::string to;
  Relation relation = Relation::NoSignalling;
  TypeExpr enclosing;
};

/// Reads the relation off the smallest subterm containing both systems:
/// `from` is full-signalling to `to` iff it is an input of that subterm.
/// Throws unless `from` is an input and `to` an output of x.
SignallingVerdict signals(const TypeExpr& x, std::string_view from, std::string_view to);

/// C_{to,from}(bar(x)) is admissible.
bool full_signalling(const TypeExpr& x, std::string_view from, std::string_view to);

/// One row per (input, output), inputs outer, both in textual order.
std::vector<SignallingVerdict> signalling_matrix(const TypeExpr& x);

struct CrosscheckRow {
  SignallingVerdict verdict;
  bool contraction_admissible = false;
  bool agrees = false;
};

/// Every matrix row next to the admissibility of the matching contraction.
std::vector<CrosscheckRow> crosscheck_rows(const TypeExpr& x);

/// True iff no-signalling rows are exactly the admissible single contractions.
bool crosscheck(const TypeExpr& x);

}  // namespace hot

#endif  // HOT_SIGNALLING_HPP

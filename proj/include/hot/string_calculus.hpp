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

#ifndef HOT_STRING_CALCULUS_HPP
#define HOT_STRING_CALCULUS_HPP

#include <string_view>

#include "hot/type_expr.hpp"
#include "hot/word_set.hpp"

namespace hot {

/// Ele_x as a word universe, in textual order.
Universe universe_of(const TypeExpr& x);

/// D_x over universe_of(x).
///
///   D_A = {0},  D_I = {},  D_{x->y} = W_x D_y  u  bar(D_x) perp(D_y)
///
/// Results are cached per subterm; the cache is safe to share across threads.
WordSet build_D(const TypeExpr& x);

/// Membership in D_x without building the set. `bits` is packed against
/// universe_of(x).
bool in_D(const TypeExpr& x, std::uint64_t bits);
/// Same, for a word over any ordering of Ele_x.
bool in_D(const TypeExpr& x, const BitWord& word);

/// e_x D_y u D_x e_y u D_x D_y over Ele_x followed by Ele_y.
WordSet tensor_D_closed_form(const TypeExpr& x, const TypeExpr& y);

/// S^x_AB = W_in~ 0_A e_out~ 0_B over universe_of(x).
/// Throws unless a is an input and b an output of x.
WordSet critical_set(const TypeExpr& x, std::string_view a, std::string_view b);

/// S^x_H: W_in~ b e_out~ b' over traceless patterns b on the contracted
/// inputs, with b' copying each pair's bit onto its output. Pairs may be
/// given in either orientation; each must join an input and an output.
WordSet critical_set_multi(const TypeExpr& x, const ContractionSpec& h);

/// Returns h with every pair ordered (input, output). Throws on a pair that
/// is not input/output or on a label outside x.
ContractionSpec orient_pairs(const IoAnalysis& io, const ContractionSpec& h);

/// Drops every cached D set.
void clear_string_cache();

}  // namespace hot

#endif  // HOT_STRING_CALCULUS_HPP

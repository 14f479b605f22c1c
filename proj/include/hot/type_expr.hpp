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

#ifndef HOT_TYPE_EXPR_HPP
#define HOT_TYPE_EXPR_HPP

#include <cstddef>
#include <iosfwd>
#include <map>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hot {

/// Exact rational used for normalization scalars.
using Rational = boost::multiprecision::cpp_rational;

inline constexpr std::string_view kTrivialName = "I";
inline constexpr int kDefaultDimension = 2;

/// A non-trivial elementary system: a name and a Hilbert-space dimension.
struct Label {
  std::string name;
  int dim = kDefaultDimension;

  friend bool operator==(const Label&, const Label&) = default;
};

/// Immutable abstract syntax of a higher-order type.
///
/// Only the core form is stored: elementary systems, the trivial type `I`
/// and arrows. Bars and tensors are desugared at construction time by
/// `bar()` and `tensor()`. Nodes are shared, so copies are cheap.
class TypeExpr {
 public:
  enum class Kind { Elementary, Trivial, Arrow };

  /// Defaults to the trivial type.
  TypeExpr();

  static TypeExpr elementary(std::string name, int dim = kDefaultDimension);
  static TypeExpr elementary(Label label);
  static TypeExpr trivial();
  static TypeExpr arrow(TypeExpr left, TypeExpr right);

  Kind kind() const;
  bool is_elementary() const { return kind() == Kind::Elementary; }
  bool is_trivial() const { return kind() == Kind::Trivial; }
  bool is_arrow() const { return kind() == Kind::Arrow; }

  /// Precondition: is_elementary().
  const Label& label() const;
  /// Precondition: is_arrow().
  const TypeExpr& left() const;
  const TypeExpr& right() const;

  /// Number of non-trivial elementary occurrences (with repetitions).
  std::size_t system_count() const;
  /// Number of nodes in the tree.
  std::size_t node_count() const;

  friend bool operator==(const TypeExpr& a, const TypeExpr& b);

 private:
  struct Node;
  explicit TypeExpr(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

/// x -> I
TypeExpr bar(TypeExpr x);
/// bar(x -> bar(y))
TypeExpr tensor(TypeExpr x, TypeExpr y);
/// Left-folded tensor of elementary systems; the trivial type when empty.
TypeExpr tensor_of(std::span<const Label> systems);

using SystemTable = std::map<std::string, int, std::less<>>;

/// Raised for malformed type text; `position()` is a 0-based byte offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Grammar (loosest to tightest): `->` (right-assoc), `*` (left-assoc),
/// prefix `~`, atoms `LABEL | I | ( type )`.
TypeExpr parse_type(std::string_view text, const SystemTable& systems = {});

/// Canonical fully parenthesized text. With `sugar`, bar and tensor
/// patterns print as `~x` and `(x*y)`.
std::string render_type(const TypeExpr& x, bool sugar = false);

/// Reads `Label = d` lines; `#` starts a comment.
SystemTable read_system_table(std::istream& in);
SystemTable load_system_table(const std::string& path);

/// One renamed occurrence. `occurrence` counts from 0 in textual order.
struct Relabeling {
  std::string original;
  int occurrence = 0;
  std::string fresh;

  friend bool operator==(const Relabeling&, const Relabeling&) = default;
};

struct RelabelResult {
  TypeExpr type;
  std::vector<Relabeling> renamed;
};

/// Gives every repeated non-trivial label a fresh name (`A`, `A1`, `A2`, ...),
/// scanning left to right. First occurrences keep their names.
RelabelResult relabel_unique(const TypeExpr& x);

/// Ele_x in textual order. Throws std::invalid_argument on a repeated label.
std::vector<Label> elementary_systems(const TypeExpr& x);
std::vector<std::string> system_names(const TypeExpr& x);

bool has_unique_labels(const TypeExpr& x);

/// Parity of arrows plus open brackets to the right of `name` in the fully
/// parenthesized rendering. 1 marks an input system.
int k_value(const TypeExpr& x, std::string_view name);

struct IoAnalysis {
  std::vector<Label> elementary;
  std::vector<Label> inputs;
  std::vector<Label> outputs;
  std::map<std::string, int, std::less<>> k;
  Rational lambda;

  bool is_input(std::string_view name) const;
  bool is_output(std::string_view name) const;
};

IoAnalysis io_partition(const TypeExpr& x);

/// lambda_E = 1/d_E, lambda_I = 1, lambda_{x->y} = lambda_y / (d_x lambda_x).
Rational normalization(const TypeExpr& x);

/// Product of the dimensions of all elementary systems of x.
Rational total_dimension(const TypeExpr& x);

/// "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& value);

/// True iff y occurs as a subterm of x (y = x included).
bool is_subtype(const TypeExpr& y, const TypeExpr& x);
/// True iff y is a subterm of x distinct from x itself.
bool is_proper_subtype(const TypeExpr& y, const TypeExpr& x);

/// Smallest subterm of x containing both systems. It is always an arrow
/// with `a` and `b` on opposite sides.
TypeExpr minimal_enclosing(const TypeExpr& x, std::string_view a,
                           std::string_view b);

}  // namespace hot

#endif  // HOT_TYPE_EXPR_HPP

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

#include <algorithm>
#include <set>

#include "hot/type_expr.hpp"

namespace hot {

namespace {

void collect_labels(const TypeExpr& x, std::vector<Label>& out) {
  if (x.is_elementary()) {
    out.push_back(x.label());
  } else if (x.is_arrow()) {
    collect_labels(x.left(), out);
    collect_labels(x.right(), out);
  }
}

bool contains_system(const TypeExpr& x, std::string_view name) {
  if (x.is_elementary()) return x.label().name == name;
  if (x.is_arrow()) return contains_system(x.left(), name) || contains_system(x.right(), name);
  return false;
}

// Parity of left-branch steps on the path from the root to `name`;
// -1 when absent.
int left_parity(const TypeExpr& x, std::string_view name) {
  if (x.is_elementary()) return x.label().name == name ? 0 : -1;
  if (!x.is_arrow()) return -1;
  if (int k = left_parity(x.left(), name); k >= 0) return k ^ 1;
  return left_parity(x.right(), name);
}

Rational dimension_product(const TypeExpr& x) {
  Rational product = 1;
  if (x.is_elementary()) {
    product = x.label().dim;
  } else if (x.is_arrow()) {
    product = dimension_product(x.left()) * dimension_product(x.right());
  }
  return product;
}

}  // namespace

std::vector<Label> elementary_systems(const TypeExpr& x) {
  std::vector<Label> labels;
  collect_labels(x, labels);
  std::set<std::string_view> seen;
  for (const Label& label : labels) {
    if (!seen.insert(label.name).second)
      throw std::invalid_argument("system '" + label.name +
                                  "' occurs more than once; relabel the type first");
  }
  return labels;
}

std::vector<std::string> system_names(const TypeExpr& x) {
  std::vector<std::string> names;
  for (Label& label : elementary_systems(x)) names.push_back(std::move(label.name));
  return names;
}

bool has_unique_labels(const TypeExpr& x) {
  std::vector<Label> labels;
  collect_labels(x, labels);
  std::set<std::string_view> seen;
  return std::all_of(labels.begin(), labels.end(),
                     [&](const Label& l) { return seen.insert(l.name).second; });
}

int k_value(const TypeExpr& x, std::string_view name) {
  // Inside (l -> r) the arrows and open brackets of r always pair up, so each
  // step into a left branch contributes exactly one to the count.
  const int k = left_parity(x, name);
  if (k < 0) throw std::invalid_argument("system '" + std::string(name) + "' not in type");
  return k;
}

bool IoAnalysis::is_input(std::string_view name) const {
  auto it = k.find(name);
  return it != k.end() && it->second == 1;
}

bool IoAnalysis::is_output(std::string_view name) const {
  auto it = k.find(name);
  return it != k.end() && it->second == 0;
}

IoAnalysis io_partition(const TypeExpr& x) {
  IoAnalysis io;
  io.elementary = elementary_systems(x);
  const auto walk = [&](const auto& self, const TypeExpr& t, int parity) -> void {
    if (t.is_elementary()) {
      io.k[t.label().name] = parity;
    } else if (t.is_arrow()) {
      self(self, t.left(), parity ^ 1);
      self(self, t.right(), parity);
    }
  };
  walk(walk, x, 0);
  for (const Label& label : io.elementary)
    (io.k[label.name] == 1 ? io.inputs : io.outputs).push_back(label);
  io.lambda = normalization(x);
  return io;
}

Rational normalization(const TypeExpr& x) {
  switch (x.kind()) {
    case TypeExpr::Kind::Trivial:
      return Rational(1);
    case TypeExpr::Kind::Elementary:
      return Rational(1) / x.label().dim;
    case TypeExpr::Kind::Arrow:
      break;
  }
  return normalization(x.right()) /
         (dimension_product(x.left()) * normalization(x.left()));
}

Rational total_dimension(const TypeExpr& x) { return dimension_product(x); }

std::string format_rational(const Rational& value) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

bool is_subtype(const TypeExpr& y, const TypeExpr& x) {
  if (y == x) return true;
  if (!x.is_arrow() || y.node_count() >= x.node_count()) return false;
  return is_subtype(y, x.left()) || is_subtype(y, x.right());
}

bool is_proper_subtype(const TypeExpr& y, const TypeExpr& x) {
  return x.is_arrow() && (is_subtype(y, x.left()) || is_subtype(y, x.right()));
}

TypeExpr minimal_enclosing(const TypeExpr& x, std::string_view a, std::string_view b) {
  if (a == b)
    throw std::invalid_argument("minimal_enclosing needs two distinct systems");
  if (!contains_system(x, a))
    throw std::invalid_argument("system '" + std::string(a) + "' not in type");
  if (!contains_system(x, b))
    throw std::invalid_argument("system '" + std::string(b) + "' not in type");
  const TypeExpr* node = &x;
  while (true) {
    // Both present and distinct, so `node` is an arrow here.
    const TypeExpr& l = node->left();
    const TypeExpr& r = node->right();
    if (contains_system(l, a) && contains_system(l, b)) {
      node = &l;
    } else if (contains_system(r, a) && contains_system(r, b)) {
      node = &r;
    } else {
      return *node;
    }
  }
}

}  // namespace hot

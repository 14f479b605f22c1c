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
#include <cctype>
#include <sstream>

#include "doctest.h"
#include "hot/type_expr.hpp"
#include "support/random_types.hpp"

using namespace hot;

namespace {

TypeExpr E(const char* name, int dim = 2) { return TypeExpr::elementary(name, dim); }
TypeExpr arrow(TypeExpr a, TypeExpr b) { return TypeExpr::arrow(std::move(a), std::move(b)); }
const TypeExpr kI = TypeExpr::trivial();

// Arrows plus open brackets to the right of the label, read off the text.
int k_by_text(const TypeExpr& x, const std::string& name) {
  const std::string text = render_type(x);
  std::size_t pos = 0;
  while (true) {
    pos = text.find(name, pos);
    REQUIRE(pos != std::string::npos);
    const bool starts = pos == 0 || !std::isalnum(static_cast<unsigned char>(text[pos - 1]));
    const std::size_t end = pos + name.size();
    const bool ends = end == text.size() || !std::isalnum(static_cast<unsigned char>(text[end]));
    if (starts && ends) break;
    pos = end;
  }
  int count = 0;
  for (std::size_t i = pos + name.size(); i < text.size(); ++i) {
    if (text[i] == '(') ++count;
    if (text.compare(i, 2, "->") == 0) ++count;
  }
  return count % 2;
}

std::vector<std::string> names(const std::vector<Label>& labels) {
  std::vector<std::string> out;
  for (const Label& l : labels) out.push_back(l.name);
  return out;
}

}  // namespace

TEST_CASE("parse builds the core form") {
  CHECK(parse_type("(A->B)") == arrow(E("A"), E("B")));
  CHECK(parse_type("~(A->B)") == arrow(arrow(E("A"), E("B")), kI));
  const TypeExpr ab = arrow(E("A"), E("B"));
  const TypeExpr cd = arrow(E("C"), E("D"));
  CHECK(parse_type("(A->B)*(C->D)") == arrow(arrow(ab, arrow(cd, kI)), kI));
  CHECK(parse_type("I").is_trivial());
  CHECK(parse_type("  ( A -> B ) ") == ab);
}

TEST_CASE("precedence and associativity") {
  CHECK(parse_type("A->B->C") == parse_type("A->(B->C)"));
  CHECK(parse_type("A*B*C") == parse_type("(A*B)*C"));
  CHECK(parse_type("~A*B") == parse_type("(~A)*B"));
  CHECK(parse_type("~A->B") == parse_type("(~A)->B"));
  CHECK(parse_type("A*B->C") == parse_type("(A*B)->C"));
  CHECK(parse_type("~~A") == bar(bar(E("A"))));
}

TEST_CASE("dimensions come from the system table") {
  const TypeExpr x = parse_type("A->B", {{"A", 3}});
  CHECK(x.left().label().dim == 3);
  CHECK(x.right().label().dim == 2);
  CHECK_THROWS_AS(parse_type("A", {{"A", 1}}), ParseError);
  CHECK_THROWS_AS(parse_type("A", {{"A", 0}}), std::invalid_argument);
  CHECK_THROWS_AS(parse_type("A", {{"I", 2}}), std::invalid_argument);
  CHECK_NOTHROW(parse_type("A", {{"I", 1}}));
}

TEST_CASE("syntax errors carry a position") {
  const auto position = [](const char* text) -> std::size_t {
    try {
      parse_type(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    FAIL("no error for " << text);
    return 0;
  };
  CHECK(position("(A->B") == 5);
  CHECK(position("A->") == 3);
  CHECK(position("a->B") == 0);
  CHECK(position("A B") == 2);
  CHECK(position("A->->B") == 3);
  CHECK(position("") == 0);
}

TEST_CASE("render") {
  CHECK(render_type(arrow(E("A"), E("B"))) == "(A->B)");
  CHECK(render_type(arrow(E("A"), kI), true) == "~A");
  CHECK(render_type(arrow(E("A"), kI)) == "(A->I)");
  CHECK(render_type(parse_type("(A->B)*(C->D)"), true) == "((A->B)*(C->D))");
  CHECK(render_type(parse_type("~(A->B)"), true) == "~(A->B)");
  CHECK(render_type(kI) == "I");
}

TEST_CASE("render then parse is the identity") {
  Rng rng(11);
  testing::TypeShape shape;
  shape.max_systems = 8;
  for (int i = 0; i < 1000; ++i) {
    const TypeExpr x = testing::random_type(rng, shape);
    CHECK(parse_type(render_type(x)) == x);
    CHECK(parse_type(render_type(x, true)) == x);
  }
}

TEST_CASE("relabel_unique") {
  RelabelResult r = relabel_unique(parse_type("(A->B)->A"));
  CHECK(render_type(r.type) == "((A->B)->A1)");
  REQUIRE(r.renamed.size() == 1);
  CHECK(r.renamed[0] == Relabeling{"A", 1, "A1"});

  r = relabel_unique(parse_type("(A->B)"));
  CHECK(render_type(r.type) == "(A->B)");
  CHECK(r.renamed.empty());

  r = relabel_unique(parse_type("((A->A)->A)"));
  CHECK(render_type(r.type) == "((A->A1)->A2)");

  // Fresh names avoid labels already in use and keep dimensions.
  r = relabel_unique(parse_type("A->A1->A", {{"A", 3}}));
  CHECK(render_type(r.type) == "(A->(A1->A2))");
  CHECK(r.type.right().right().label().dim == 3);
  CHECK(has_unique_labels(r.type));
}

TEST_CASE("elementary_systems") {
  CHECK(names(elementary_systems(parse_type("((A->B)->I)->C"))) ==
        std::vector<std::string>{"A", "B", "C"});
  CHECK(elementary_systems(kI).empty());
  CHECK(names(elementary_systems(parse_type("(A->B)*(C->D)"))) ==
        std::vector<std::string>{"A", "B", "C", "D"});
  CHECK_THROWS_AS(elementary_systems(parse_type("A->A")), std::invalid_argument);
}

TEST_CASE("k_value examples") {
  const TypeExpr ab = parse_type("(A->B)");
  CHECK(k_value(ab, "A") == 1);
  CHECK(k_value(ab, "B") == 0);
  const TypeExpr comb = parse_type("((A->B)->(C->D))");
  CHECK(k_value(comb, "A") == 0);
  CHECK(k_value(comb, "B") == 1);
  CHECK(k_value(comb, "C") == 1);
  CHECK(k_value(comb, "D") == 0);
  const TypeExpr prod = parse_type("(A->B)*(C->D)");
  CHECK(k_value(prod, "A") == 1);
  CHECK(k_value(prod, "C") == 1);
  CHECK_THROWS_AS(k_value(ab, "C"), std::invalid_argument);
}

TEST_CASE("k_value agrees with counting on the text") {
  Rng rng(12);
  testing::TypeShape shape;
  shape.max_systems = 8;
  for (int i = 0; i < 1000; ++i) {
    const TypeExpr x = testing::random_type(rng, shape);
    for (const std::string& name : system_names(x)) CHECK(k_value(x, name) == k_by_text(x, name));
  }
}

TEST_CASE("io_partition examples") {
  IoAnalysis io = io_partition(parse_type("A", {{"A", 3}}));
  CHECK(io.inputs.empty());
  CHECK(names(io.outputs) == std::vector<std::string>{"A"});
  CHECK(io.lambda == Rational(1, 3));

  io = io_partition(parse_type("A->B", {{"B", 5}}));
  CHECK(names(io.inputs) == std::vector<std::string>{"A"});
  CHECK(names(io.outputs) == std::vector<std::string>{"B"});
  CHECK(io.lambda == Rational(1, 5));

  io = io_partition(parse_type("~A"));
  CHECK(names(io.inputs) == std::vector<std::string>{"A"});
  CHECK(io.outputs.empty());
  CHECK(io.lambda == 1);

  io = io_partition(kI);
  CHECK(io.elementary.empty());
  CHECK(io.lambda == 1);

  io = io_partition(parse_type("((A->B)->(C->D))"));
  CHECK(names(io.inputs) == std::vector<std::string>{"B", "C"});
  CHECK(names(io.outputs) == std::vector<std::string>{"A", "D"});
  CHECK(format_rational(io.lambda) == "1/4");
}

TEST_CASE("partition, lambda and bar laws on random types") {
  Rng rng(13);
  testing::TypeShape shape;
  shape.max_systems = 8;
  shape.dims = {2, 3, 4};
  for (int i = 0; i < 1000; ++i) {
    const TypeExpr x = testing::random_type(rng, shape);
    const IoAnalysis io = io_partition(x);
    CHECK(io.inputs.size() + io.outputs.size() == io.elementary.size());
    Rational product = 1;
    for (const Label& out : io.outputs) product /= out.dim;
    CHECK(io.lambda == product);
    for (const Label& in : io.inputs) CHECK(io.is_input(in.name));
    for (const Label& out : io.outputs) CHECK_FALSE(io.is_input(out.name));

    const IoAnalysis flipped = io_partition(bar(x));
    CHECK(names(flipped.inputs) == names(io.outputs));
    CHECK(names(flipped.outputs) == names(io.inputs));
  }
}

TEST_CASE("format_rational") {
  CHECK(format_rational(Rational(1)) == "1");
  CHECK(format_rational(Rational(3, 12)) == "1/4");
  CHECK(format_rational(Rational(0)) == "0");
}

TEST_CASE("is_subtype") {
  const TypeExpr ab = parse_type("(A->B)");
  CHECK(is_subtype(ab, parse_type("((A->B)->I)")));
  CHECK(is_subtype(ab, ab));
  CHECK_FALSE(is_proper_subtype(ab, ab));
  CHECK(is_subtype(parse_type("(C->D)"), parse_type("((C->D)->((A->B)->I))")));
  CHECK(is_subtype(parse_type("(A->B)->I"), parse_type("((C->D)->((A->B)->I))")));
  CHECK_FALSE(is_subtype(parse_type("(D->C)"), parse_type("((C->D)->((A->B)->I))")));
  CHECK(is_subtype(parse_type("B->C"), parse_type("A->B->C")));
  CHECK_FALSE(is_subtype(parse_type("A->B"), parse_type("A->B->C")));
}

TEST_CASE("minimal_enclosing") {
  const TypeExpr comb = parse_type("((A->B)->(C->D))");
  CHECK(render_type(minimal_enclosing(comb, "B", "A")) == "(A->B)");
  CHECK(minimal_enclosing(comb, "A", "C") == comb);
  CHECK(render_type(minimal_enclosing(parse_type("C->D"), "C", "D")) == "(C->D)");
  CHECK_THROWS_AS(minimal_enclosing(comb, "A", "E"), std::invalid_argument);
  CHECK_THROWS_AS(minimal_enclosing(comb, "A", "A"), std::invalid_argument);
}

TEST_CASE("minimal_enclosing is symmetric and minimal") {
  Rng rng(14);
  testing::TypeShape shape;
  shape.min_systems = 2;
  shape.max_systems = 7;
  for (int i = 0; i < 300; ++i) {
    const TypeExpr x = testing::random_type(rng, shape);
    const std::vector<std::string> ele = system_names(x);
    for (std::size_t a = 0; a < ele.size(); ++a) {
      for (std::size_t b = a + 1; b < ele.size(); ++b) {
        const TypeExpr y = minimal_enclosing(x, ele[a], ele[b]);
        CHECK(y == minimal_enclosing(x, ele[b], ele[a]));
        CHECK(is_subtype(y, x));
        const std::vector<std::string> inside = system_names(y);
        CHECK(std::count(inside.begin(), inside.end(), ele[a]) == 1);
        CHECK(std::count(inside.begin(), inside.end(), ele[b]) == 1);
        REQUIRE(y.is_arrow());
        for (const TypeExpr* side : {&y.left(), &y.right()}) {
          const std::vector<std::string> part = system_names(*side);
          const bool both = std::count(part.begin(), part.end(), ele[a]) &&
                            std::count(part.begin(), part.end(), ele[b]);
          CHECK_FALSE(both);
        }
      }
    }
  }
}

TEST_CASE("system table file format") {
  std::istringstream in(
      "# dimensions\n"
      "A = 3\n"
      "B=4   # trailing comment\n"
      "\n"
      "C =5\n");
  const SystemTable t = read_system_table(in);
  CHECK(t.at("A") == 3);
  CHECK(t.at("B") == 4);
  CHECK(t.at("C") == 5);
  std::istringstream bad("A 3\n");
  CHECK_THROWS_AS(read_system_table(bad), std::invalid_argument);
  std::istringstream zero("A = 0\n");
  CHECK_THROWS_AS(read_system_table(zero), std::invalid_argument);
}

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


#include <sstream>

#include "doctest.h"
#include "hot/admissibility.hpp"
#include "hot/oracle.hpp"
#include "hot/signalling.hpp"
#include "support/random_types.hpp"

using namespace hot;
using namespace hot::oracle;

namespace {

using Op = OperatorMatrix<double>;
using M = Matrix<double>;

constexpr double kExact = 1e-12;
constexpr double kTol = 1e-9;

Label L(const char* name, int dim = 2) { return Label{name, dim}; }

M random_matrix(Rng& rng, Eigen::Index side) {
  M m(side, side);
  for (Eigen::Index i = 0; i < side; ++i)
    for (Eigen::Index j = 0; j < side; ++j)
      m(i, j) = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
  return m;
}

Op random_op(Rng& rng, std::vector<Label> labels) {
  const long side = dimension_of(labels);
  return {std::move(labels), random_matrix(rng, side)};
}

Op random_positive(Rng& rng, std::vector<Label> labels) {
  Op op = random_op(rng, std::move(labels));
  op.data = op.data * op.data.adjoint();
  return op;
}

// The link product exactly as defined: transpose S on the shared systems,
// pad both with identities, multiply, trace the shared systems.
Op literal_link(const Op& r, const Op& s) {
  std::vector<std::string> shared;
  std::vector<Label> r_extra, s_extra;
  for (const Label& l : r.labels) {
    if (has_label(s.labels, l.name)) {
      shared.push_back(l.name);
    } else {
      s_extra.push_back(l);
    }
  }
  for (const Label& l : s.labels)
    if (!has_label(r.labels, l.name)) r_extra.push_back(l);
  const Op r_full = kron(r, identity<double>(r_extra));
  Op s_full = kron(partial_transpose(s, shared), identity<double>(s_extra));
  s_full = reorder(s_full, names_of(r_full));
  const Op product{r_full.labels, r_full.data * s_full.data};
  return partial_trace(product, shared);
}

double distance(const Op& a, const Op& b) { return max_abs<double>(a.data - reorder(b, names_of(a)).data); }

std::vector<std::string> names(const std::vector<Label>& labels) {
  std::vector<std::string> out;
  for (const Label& l : labels) out.push_back(l.name);
  return out;
}

}  // namespace

TEST_CASE("herm_basis is orthonormal") {
  CHECK(herm_basis<double>(1).size() == 1);
  for (int d = 1; d <= 4; ++d) {
    const std::vector<M> basis = herm_basis<double>(d);
    REQUIRE(basis.size() == static_cast<std::size_t>(d * d));
    CHECK(max_abs<double>(basis[0] - M::Identity(d, d) / std::sqrt(double(d))) < kExact);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      CHECK(hermiticity_error<double>(basis[i]) < kExact);
      if (i > 0) CHECK(std::abs(basis[i].trace()) < kExact);
      for (std::size_t j = 0; j < basis.size(); ++j) {
        const std::complex<double> ip = (basis[i].adjoint() * basis[j]).trace();
        CHECK(std::abs(ip - (i == j ? 1.0 : 0.0)) < kExact);
      }
    }
  }
}

TEST_CASE("tensor index helpers") {
  Rng rng(51);
  const Op a = random_op(rng, {L("A")});
  const Op b = random_op(rng, {L("B", 3)});
  const Op ab = kron(a, b);
  CHECK(ab.side() == 6);
  CHECK(distance(kron(b, a), reorder(ab, {"B", "A"})) < kExact);
  const Op traced = partial_trace(ab, {"B"});
  CHECK(max_abs<double>(traced.data - a.data * b.data.trace()) < kExact);
  CHECK(max_abs<double>(partial_transpose(partial_transpose(ab, {"A"}), {"A"}).data - ab.data) <
        kExact);
  CHECK(max_abs<double>(partial_transpose(ab, {"A", "B"}).data - ab.data.transpose()) < kExact);
  CHECK(max_abs<double>(partial_transpose(ab, {"B"}).data -
                        kron(a, Op{b.labels, b.data.transpose()}).data) < kExact);
  CHECK_THROWS_AS(kron(a, a), std::invalid_argument);
  CHECK_THROWS_AS(dimension_of({L("A", 16), L("B", 17)}), std::length_error);

  std::ostringstream dump;
  write_matrix(dump, a);
  CHECK(dump.str().rfind("2\n", 0) == 0);
}

TEST_CASE("link product") {
  Rng rng(52);
  // Identity channels chain to the identity channel.
  const Op chained = link_product(phi<double>(L("A"), L("B")), phi<double>(L("B"), L("C")));
  CHECK(distance(chained, phi<double>(L("A"), L("C"))) < kExact);

  const Op r = random_op(rng, {L("A"), L("B")});
  const Op s = random_op(rng, {L("C", 3)});
  CHECK(distance(link_product(r, s), kron(r, s)) < kExact);

  for (int i = 0; i < 20; ++i) {
    const Op x = random_op(rng, {L("A"), L("B", 3), L("C")});
    const Op y = random_op(rng, {L("C"), L("D"), L("B", 3)});
    const Op z = random_op(rng, {L("D"), L("E")});
    CHECK(distance(link_product(x, y), literal_link(x, y)) < kExact);
    CHECK(distance(link_product(x, y), link_product(y, x)) < kExact);
    CHECK(distance(link_product(link_product(x, y), z), link_product(x, link_product(y, z))) <
          1e-10);
  }
  CHECK_THROWS_AS(link_product(random_op(rng, {L("A")}), random_op(rng, {L("A", 3)})),
                  std::invalid_argument);
}

TEST_CASE("link product preserves positivity") {
  Rng rng(53);
  for (int i = 0; i < 20; ++i) {
    const Op r = random_positive(rng, {L("A"), L("B")});
    const Op s = random_positive(rng, {L("B"), L("C")});
    CHECK(min_eigenvalue<double>(link_product(r, s).data) >= -kExact);
  }
}

TEST_CASE("numeric contraction") {
  const Op p = phi<double>(L("A", 3), L("B", 3));
  const Op scalar = numeric_contraction(p, "A", "B");
  CHECK(scalar.labels.empty());
  CHECK(std::abs(scalar.data(0, 0) - 9.0) < kExact);

  Rng rng(54);
  const Op rho = random_op(rng, {L("A")});
  const Op sigma = random_op(rng, {L("B")});
  const Op c = numeric_contraction(kron(rho, sigma), "A", "B");
  CHECK(std::abs(c.data(0, 0) - (rho.data * sigma.data.transpose()).trace()) < kExact);
  CHECK_THROWS_AS(numeric_contraction(kron(rho, random_op(rng, {L("C", 3)})), "A", "C"),
                  std::invalid_argument);
}

TEST_CASE("delta basis") {
  CHECK(delta_basis<double>(parse_type("A")).elements.size() == 3);
  CHECK(delta_basis<double>(parse_type("A->B")).elements.size() == 12);
  CHECK(delta_dimension(parse_type("A->B")) == 12);
  CHECK(delta_dimension(parse_type("A->B", {{"A", 3}})) == 8 * 3 + 3);

  Rng rng(55);
  testing::TypeShape shape;
  shape.max_systems = 3;
  shape.dims = {2, 3};
  for (int i = 0; i < 20; ++i) {
    const TypeExpr x = testing::random_type(rng, shape);
    const SubspaceBasis<double> basis = delta_basis<double>(x);
    CHECK(basis.elements.size() == delta_dimension(x));
    const long side = dimension_of(basis.labels);
    for (std::size_t a = 0; a < basis.elements.size(); ++a) {
      CHECK(std::abs(basis.elements[a].data.trace()) < kExact);
      for (std::size_t b = a; b < basis.elements.size(); ++b) {
        const auto ip = (basis.elements[a].data.adjoint() * basis.elements[b].data).trace();
        CHECK(std::abs(ip - (a == b ? 1.0 : 0.0)) < kExact);
      }
    }
    // The projection fixes every basis element and kills the identity.
    Op id = identity<double>(basis.labels);
    CHECK(max_abs<double>(project_onto_words(id, build_D(x))) < kExact);
    for (const Op& e : basis.elements)
      CHECK(max_abs<double>(project_onto_words(e, build_D(x)) - e.data) < kExact);
    (void)side;
  }
}

TEST_CASE("sampled deterministic maps") {
  const TypeExpr channel = parse_type("A->B", {{"A", 3}});
  const Op centre = sample_deterministic<double>(channel, 1, 0.0);
  CHECK(max_abs<double>(centre.data - M::Identity(6, 6) / 2.0) == 0.0);

  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Op r = sample_deterministic<double>(channel, seed, 1.0);
    CHECK(is_channel<double>(r, {"A"}, {"B"}, kTol));
    CHECK(std::abs(r.data.trace() - 3.0) < kTol);
    CHECK(membership<double>(channel, r, kTol));
  }
  const Op again = sample_deterministic<double>(channel, 7, 1.0);
  CHECK(max_abs<double>(again.data - sample_deterministic<double>(channel, 7, 1.0).data) == 0.0);
  CHECK(max_abs<double>(again.data - sample_deterministic<double>(channel, 8, 1.0).data) > 1e-6);

  Rng rng(56);
  testing::TypeShape shape;
  shape.max_systems = 4;
  for (int i = 0; i < 30; ++i) {
    const TypeExpr x = testing::random_type(rng, shape);
    const IoAnalysis io = io_partition(x);
    const Op r = sample_deterministic<double>(x, rng.next(), 1.0);
    double d_in = 1;
    for (const Label& l : io.inputs) d_in *= l.dim;
    CHECK(std::abs(r.data.trace().real() - d_in) < kTol);
    CHECK(membership<double>(x, r, kTol));
    if (!io.outputs.empty()) CHECK(is_channel<double>(r, names(io.inputs), names(io.outputs), kTol));
  }
}

TEST_CASE("channel and no-signalling tests") {
  Op depolarizing = identity<double>({L("A"), L("B")});
  depolarizing.data /= 2.0;
  CHECK(is_channel<double>(depolarizing, {"A"}, {"B"}, kTol));
  const Op id = phi<double>(L("A"), L("B"));
  CHECK(is_channel<double>(id, {"A"}, {"B"}, kTol));
  CHECK_FALSE(is_nosignalling<double>(id, {"A"}, {"B"}, "A", "B", kTol));
  CHECK(is_nosignalling<double>(depolarizing, {"A"}, {"B"}, "A", "B", kTol));

  const TypeExpr product = parse_type("(A->B)*(C->D)");
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Op r = sample_deterministic<double>(product, seed, 1.0);
    CHECK(is_nosignalling<double>(r, {"A", "C"}, {"B", "D"}, "A", "D", kTol));
    CHECK(is_nosignalling<double>(r, {"A", "C"}, {"B", "D"}, "C", "B", kTol));
  }
  const Op r = sample_deterministic<double>(product, 99, 1.0);
  CHECK_FALSE(is_nosignalling<double>(r, {"A", "C"}, {"B", "D"}, "A", "B", kTol));
}

TEST_CASE("membership") {
  const TypeExpr comb = parse_type("((A->B)->(C->D))");
  const TypeExpr channel = parse_type("(C*B)->(A*D)");
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Op r = sample_deterministic<double>(comb, seed, 1.0);
    CHECK(membership<double>(comb, r, kTol));
    CHECK(membership<double>(channel, r, kTol));
  }
  // A generic channel signals from D's side back into the comb's first slot.
  bool some_outside = false;
  for (std::uint64_t seed = 0; seed < 10; ++seed)
    some_outside |= !membership<double>(comb, sample_deterministic<double>(channel, seed, 1.0), kTol);
  CHECK(some_outside);

  // Perturbation along 0_A1_B, a word outside D_{A->B}.
  const TypeExpr x = parse_type("A->B");
  Op r = identity<double>({L("A"), L("B")});
  r.data *= 0.5;
  r.data += 0.1 * kron(Op{{L("A")}, z_type<double>(2)}, identity<double>({L("B")})).data;
  const MembershipReport<double> report = membership_report(x, r);
  CHECK(report.min_eigenvalue >= 0);
  CHECK(report.residual > 0.05);
  CHECK_FALSE(report.ok(kTol));
}

TEST_CASE("violation witness") {
  const TypeExpr product = parse_type("(A->B)*(C->D)");
  const ViolationWitness<double> w = violation_witness<double>(product, ContractionSpec{{"A", "B"}});
  CHECK(w.word.to_string() == "0_A0_B1_C1_D");
  CHECK(membership<double>(product, w.map, kTol));
  CHECK(w.inputs == std::vector<std::string>{"C"});
  CHECK(w.outputs == std::vector<std::string>{"D"});
  CHECK(w.margin >= 1e-3);
  CHECK(std::abs(w.margin - 0.5) < kTol);
  CHECK_FALSE(is_channel<double>(w.contracted, w.inputs, w.outputs, kTol));

  const ViolationWitness<double> half =
      violation_witness<double>(product, ContractionSpec{{"A", "B"}}, 0.25);
  CHECK(std::abs(2 * half.margin - w.margin) < kTol);

  const ViolationWitness<double> multi =
      violation_witness<double>(product, ContractionSpec{{"C", "B"}, {"A", "D"}});
  CHECK(multi.margin >= 1e-3);

  CHECK_THROWS_AS(violation_witness<double>(product, ContractionSpec{{"C", "B"}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(violation_witness<double>(product, ContractionSpec{{"A", "C"}}),
                  std::invalid_argument);
}

TEST_CASE("contraction soundness and completeness on small types") {
  Rng rng(57);
  testing::TypeShape shape;
  shape.max_systems = 4;
  for (int i = 0; i < 15; ++i) {
    const TypeExpr x = testing::random_type(rng, shape);
    const IoAnalysis io = io_partition(x);
    for (const Label& a : io.inputs) {
      for (const Label& b : io.outputs) {
        const ContractionSpec pair{{a.name, b.name}};
        const Verdict v = check_contraction(x, pair);
        if (v.admissible) {
          for (int t = 0; t < 5; ++t) {
            const Op c = numeric_contraction(sample_deterministic<double>(x, rng.next(), 1.0), pair);
            CHECK(is_channel<double>(c, v.result_io->inputs, v.result_io->outputs, kTol));
          }
        } else {
          CHECK(violation_witness<double>(x, pair).margin >= 1e-3);
        }
      }
    }
  }
}

TEST_CASE("contraction maps Delta_x into the span of the contracted words") {
  Rng rng(58);
  testing::TypeShape shape;
  shape.min_systems = 2;
  shape.max_systems = 5;
  int checked = 0;
  for (int i = 0; i < 40; ++i) {
    const TypeExpr x = testing::random_type(rng, shape);
    const std::vector<std::string> ele = system_names(x);
    const std::string a = ele[rng.below(ele.size())];
    std::string b = ele[rng.below(ele.size())];
    if (a == b) continue;
    const ContractionSpec pair{{a, b}};
    // A random element of Delta_x: the centred part of a sample.
    Op r = sample_deterministic<double>(x, rng.next(), 1.0);
    r.data -= to_real<double>(normalization(x)) * M::Identity(r.side(), r.side());
    const Op c = numeric_contraction(r, pair);
    const WordSet target = contract_set(build_D(x), pair);
    const double residual = max_abs<double>(c.data - project_onto_words(c, target));
    CHECK(residual <= kTol);
    ++checked;
  }
  CHECK(checked > 10);
}

TEST_CASE("trace law and no-signalling agree with the type") {
  Rng rng(59);
  testing::TypeShape shape;
  shape.max_systems = 3;
  int composed = 0;
  for (int i = 0; i < 40; ++i) {
    const TypeExpr x = testing::random_type(rng, shape);
    const TypeExpr y = testing::random_type_from(rng, static_cast<int>(rng.below(3)), shape);
    const Verdict v = check_composition(x, y);
    if (!v.admissible) continue;
    ++composed;
    const Op r = sample_deterministic<double>(x, rng.next(), 1.0);
    const Op s = sample_deterministic<double>(y, rng.next(), 1.0);
    const Op linked = link_product(r, s);
    double d_in = 1;
    for (const std::string& in : v.result_io->inputs)
      d_in *= linked.labels[position_of(linked.labels, in)].dim;
    CHECK(std::abs(linked.data.trace().real() - d_in) < kTol);
  }
  CHECK(composed > 5);

  shape.max_systems = 4;
  for (int i = 0; i < 15; ++i) {
    const TypeExpr x = testing::random_type(rng, shape);
    const IoAnalysis io = io_partition(x);
    std::vector<Op> samples;
    for (int t = 0; t < 4; ++t) samples.push_back(sample_deterministic<double>(x, rng.next(), 1.0));
    for (const SignallingVerdict& row : signalling_matrix(x)) {
      int passing = 0;
      for (const Op& r : samples)
        passing += is_nosignalling<double>(r, names(io.inputs), names(io.outputs), row.from, row.to,
                                           kTol);
      if (row.relation == Relation::NoSignalling) {
        CHECK(passing == 4);
      } else {
        CHECK(passing < 4);
      }
    }
  }
}

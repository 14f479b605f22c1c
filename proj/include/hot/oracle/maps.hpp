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


#ifndef HOT_ORACLE_MAPS_HPP
#define HOT_ORACLE_MAPS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hot/admissibility.hpp"
#include "hot/oracle/basis.hpp"
#include "hot/oracle/link.hpp"
#include "hot/random.hpp"

namespace hot::oracle {

inline constexpr int kMaxHalvings = 60;

template <typename Real>
Real to_real(const Rational& r) {
  return static_cast<Real>(r.template convert_to<long double>());
}

inline std::vector<std::string> names_of(const std::vector<Label>& labels) {
  std::vector<std::string> out;
  for (const Label& l : labels) out.push_back(l.name);
  return out;
}

/// lambda_x I + s sum_i c_i T_i over the basis of Delta_x, with c_i uniform in
/// [-magnitude, magnitude] and s halved from 1 until the result is positive
/// semidefinite. Falls back to lambda_x I after kMaxHalvings.
template <typename Real>
OperatorMatrix<Real> sample_deterministic(const TypeExpr& x, std::uint64_t seed, Real magnitude) {
  const std::vector<Label> labels = elementary_systems(x);
  const long side = dimension_of(labels);
  const Real lambda = to_real<Real>(normalization(x));
  OperatorMatrix<Real> base{labels, Matrix<Real>::Identity(side, side) * lambda};
  if (magnitude == Real(0)) return base;

  Rng rng(seed);
  Matrix<Real> x_part = Matrix<Real>::Zero(side, side);
  const WordSet d = build_D(x);
  for (std::uint64_t w : d.words())
    for_each_word_element<Real>(labels, w, [&](const Matrix<Real>& t) {
      x_part += static_cast<Real>(rng.uniform(-1.0, 1.0)) * magnitude * t;
    });

  Real scale = 1;
  for (int i = 0; i < kMaxHalvings; ++i, scale /= 2) {
    Matrix<Real> candidate = base.data + scale * x_part;
    if (min_eigenvalue<Real>(candidate) >= Real(0)) return {labels, std::move(candidate)};
  }
  return base;
}

template <typename Real>
struct ChannelReport {
  Real min_eigenvalue = 0;
  /// max |Tr_out R - I_in|
  Real trace_residual = 0;
  Real hermiticity = 0;

  bool ok(Real tol) const {
    return min_eigenvalue >= -tol && trace_residual <= tol && hermiticity <= tol;
  }
};

template <typename Real>
ChannelReport<Real> channel_report(const OperatorMatrix<Real>& r,
                                   const std::vector<std::string>& inputs,
                                   const std::vector<std::string>& outputs) {
  if (inputs.size() + outputs.size() != r.labels.size())
    throw std::invalid_argument("inputs and outputs must partition the systems");
  ChannelReport<Real> report;
  report.hermiticity = hermiticity_error<Real>(r.data);
  report.min_eigenvalue = min_eigenvalue<Real>(r.data);
  const OperatorMatrix<Real> marginal = reorder(partial_trace(r, outputs), inputs);
  report.trace_residual =
      max_abs<Real>(marginal.data - Matrix<Real>::Identity(marginal.side(), marginal.side()));
  return report;
}

template <typename Real>
bool is_channel(const OperatorMatrix<Real>& r, const std::vector<std::string>& inputs,
                const std::vector<std::string>& outputs, Real tol) {
  return channel_report(r, inputs, outputs).ok(tol);
}

/// max |Tr_{out\B} R - I_A/d_A (x) Tr_{A, out\B} R|
template <typename Real>
Real nosignalling_residual(const OperatorMatrix<Real>& r, const std::vector<std::string>& outputs,
                           const std::string& from, const std::string& to) {
  std::vector<std::string> traced;
  for (const std::string& o : outputs)
    if (o != to) traced.push_back(o);
  const OperatorMatrix<Real> m1 = partial_trace(r, traced);
  const OperatorMatrix<Real> m2 = partial_trace(m1, {from});
  const Label a = m1.labels[position_of(m1.labels, from)];
  OperatorMatrix<Real> id_a = identity<Real>({a});
  id_a.data /= Real(a.dim);
  const OperatorMatrix<Real> rebuilt = reorder(kron(id_a, m2), names_of(m1));
  return max_abs<Real>(m1.data - rebuilt.data);
}

template <typename Real>
bool is_nosignalling(const OperatorMatrix<Real>& r, const std::vector<std::string>& inputs,
                     const std::vector<std::string>& outputs, const std::string& from,
                     const std::string& to, Real tol) {
  if (std::find(inputs.begin(), inputs.end(), from) == inputs.end())
    throw std::invalid_argument("'" + from + "' is not an input");
  if (std::find(outputs.begin(), outputs.end(), to) == outputs.end())
    throw std::invalid_argument("'" + to + "' is not an output");
  return nosignalling_residual(r, outputs, from, to) <= tol;
}

template <typename Real>
struct MembershipReport {
  Real min_eigenvalue = 0;
  Real hermiticity = 0;
  /// |Tr R / side - lambda_x|
  Real identity_error = 0;
  /// max |X - P(X)| with X = R - lambda_x I and P the projection on Delta_x.
  Real residual = 0;

  bool ok(Real tol) const {
    return min_eigenvalue >= -tol && hermiticity <= tol && identity_error <= tol &&
           residual <= tol;
  }
};

/// Tests R = lambda_x I + X with X in Delta_x and R >= 0. R may list the
/// systems of x in any order.
template <typename Real>
MembershipReport<Real> membership_report(const TypeExpr& x, const OperatorMatrix<Real>& r) {
  const std::vector<Label> labels = elementary_systems(x);
  for (const Label& l : labels) {
    if (!has_label(r.labels, l.name) || r.labels[position_of(r.labels, l.name)].dim != l.dim)
      throw std::invalid_argument("operator systems do not match the type");
  }
  const OperatorMatrix<Real> m = reorder(r, names_of(labels));
  const Real lambda = to_real<Real>(normalization(x));
  MembershipReport<Real> report;
  report.hermiticity = hermiticity_error<Real>(m.data);
  report.min_eigenvalue = min_eigenvalue<Real>(m.data);
  report.identity_error = std::abs(m.data.trace().real() / Real(m.side()) - lambda);
  OperatorMatrix<Real> shifted = m;
  shifted.data -= lambda * Matrix<Real>::Identity(m.side(), m.side());
  report.residual = max_abs<Real>(shifted.data - project_onto_words(shifted, build_D(x)));
  return report;
}

template <typename Real>
bool membership(const TypeExpr& x, const OperatorMatrix<Real>& r, Real tol) {
  return membership_report(x, r).ok(tol);
}

template <typename Real>
struct ViolationWitness {
  BitWord word;
  Real epsilon = 0;
  /// lambda_x I + epsilon T.
  OperatorMatrix<Real> map;
  OperatorMatrix<Real> contracted;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  /// max |Tr_out C(R) - I_in| after contraction.
  Real margin = 0;
};

/// diag(1, -1, 0, ...), traceless.
template <typename Real>
Matrix<Real> z_type(int d) {
  Matrix<Real> z = Matrix<Real>::Zero(d, d);
  z(0, 0) = 1;
  z(1, 1) = -1;
  return z;
}

/// A deterministic map of type x whose contraction over `pairs` is not a
/// channel: T is Z-type on every 0 of the witness word and identity on
/// every 1. Throws std::invalid_argument when the contraction is admissible
/// or rejected before any witness word exists.
template <typename Real>
ViolationWitness<Real> violation_witness(const TypeExpr& x, const ContractionSpec& pairs,
                                         Real epsilon_fraction = Real(0.5)) {
  const Verdict verdict = check_contraction(x, pairs);
  if (verdict.admissible) throw std::invalid_argument("contraction is admissible");
  if (!verdict.witness)
    throw std::invalid_argument("contraction rejected without a witness word (" +
                                std::string(reason_name(verdict.reason)) + ")");
  const std::vector<Label> labels = elementary_systems(x);
  const std::size_t n = labels.size();
  const BitWord& word = *verdict.witness;
  const long side = dimension_of(labels);

  Matrix<Real> t = Matrix<Real>::Identity(1, 1);
  for (std::size_t p = 0; p < n; ++p) {
    const int d = labels[p].dim;
    const Matrix<Real> f = bit_at(word.bits(), n, p) == 0 ? z_type<Real>(d)
                                                          : Matrix<Real>(Matrix<Real>::Identity(d, d));
    Matrix<Real> next(t.rows() * d, t.cols() * d);
    for (Eigen::Index i = 0; i < t.rows(); ++i)
      for (Eigen::Index j = 0; j < t.cols(); ++j) next.block(i * d, j * d, d, d) = t(i, j) * f;
    t = std::move(next);
  }
  const Real lambda = to_real<Real>(normalization(x));
  ViolationWitness<Real> out;
  out.word = word;
  // |T| has operator norm 1, so any epsilon <= lambda keeps R positive.
  out.epsilon = epsilon_fraction * lambda;
  out.map = {labels, Matrix<Real>::Identity(side, side) * lambda + out.epsilon * t};
  out.contracted = numeric_contraction(out.map, pairs);

  const IoAnalysis io = io_partition(x);
  for (const Label& l : io.inputs)
    if (has_label(out.contracted.labels, l.name)) out.inputs.push_back(l.name);
  for (const Label& l : io.outputs)
    if (has_label(out.contracted.labels, l.name)) out.outputs.push_back(l.name);
  out.margin = channel_report(out.contracted, out.inputs, out.outputs).trace_residual;
  return out;
}

}  // namespace hot::oracle

#endif  // HOT_ORACLE_MAPS_HPP

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


#ifndef HOT_ORACLE_OPERATOR_HPP
#define HOT_ORACLE_OPERATOR_HPP

#include <algorithm>
#include <complex>
#include <cstddef>
#include <iomanip>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hot/type_expr.hpp"

namespace hot::oracle {

/// Largest total Hilbert dimension the oracle accepts.
inline constexpr long kMaxDimension = 256;

template <typename Real>
using Complex = std::complex<Real>;

template <typename Real>
using Matrix = Eigen::Matrix<Complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

/// A dense operator on the tensor product of `labels`, first label most
/// significant in the row/column index.
template <typename Real>
struct OperatorMatrix {
  std::vector<Label> labels;
  Matrix<Real> data;

  Eigen::Index side() const { return data.rows(); }
};

inline long dimension_of(const std::vector<Label>& labels) {
  long side = 1;
  for (const Label& l : labels) {
    side *= l.dim;
    if (side > kMaxDimension)
      throw std::length_error("total dimension exceeds " + std::to_string(kMaxDimension));
  }
  return side;
}

inline std::size_t position_of(const std::vector<Label>& labels, const std::string& name) {
  auto it = std::find_if(labels.begin(), labels.end(),
                         [&](const Label& l) { return l.name == name; });
  if (it == labels.end()) throw std::invalid_argument("system '" + name + "' not present");
  return static_cast<std::size_t>(it - labels.begin());
}

inline bool has_label(const std::vector<Label>& labels, const std::string& name) {
  return std::any_of(labels.begin(), labels.end(),
                     [&](const Label& l) { return l.name == name; });
}

/// Row-major strides of the tensor index.
inline std::vector<long> strides_of(const std::vector<Label>& labels) {
  std::vector<long> strides(labels.size(), 1);
  for (std::size_t k = labels.size(); k-- > 1;) strides[k - 1] = strides[k] * labels[k].dim;
  return strides;
}

/// Index offsets of every multi-index over `subset` (positions into `labels`),
/// enumerated in the order of `subset`.
inline std::vector<long> offsets_of(const std::vector<Label>& labels,
                                    const std::vector<std::size_t>& subset) {
  const std::vector<long> strides = strides_of(labels);
  std::vector<long> offsets{0};
  for (std::size_t p : subset) {
    std::vector<long> next;
    next.reserve(offsets.size() * labels[p].dim);
    for (long base : offsets)
      for (int digit = 0; digit < labels[p].dim; ++digit) next.push_back(base + digit * strides[p]);
    offsets = std::move(next);
  }
  return offsets;
}

template <typename Real>
OperatorMatrix<Real> identity(const std::vector<Label>& labels) {
  const long side = dimension_of(labels);
  return {labels, Matrix<Real>::Identity(side, side)};
}

template <typename Real>
OperatorMatrix<Real> kron(const OperatorMatrix<Real>& a, const OperatorMatrix<Real>& b) {
  std::vector<Label> labels = a.labels;
  for (const Label& l : b.labels) {
    if (has_label(labels, l.name))
      throw std::invalid_argument("kron: system '" + l.name + "' on both sides");
    labels.push_back(l);
  }
  const Eigen::Index n = b.side();
  Matrix<Real> out(a.side() * n, a.side() * n);
  for (Eigen::Index i = 0; i < a.side(); ++i)
    for (Eigen::Index j = 0; j < a.side(); ++j) out.block(i * n, j * n, n, n) = a.data(i, j) * b.data;
  return {std::move(labels), std::move(out)};
}

/// The same operator with its tensor factors listed in `order`.
template <typename Real>
OperatorMatrix<Real> reorder(const OperatorMatrix<Real>& m, const std::vector<std::string>& order) {
  if (order.size() != m.labels.size())
    throw std::invalid_argument("reorder needs a permutation of the systems");
  std::vector<std::size_t> positions;
  std::vector<Label> labels;
  for (const std::string& name : order) {
    positions.push_back(position_of(m.labels, name));
    labels.push_back(m.labels[positions.back()]);
  }
  const std::vector<long> perm = offsets_of(m.labels, positions);
  const auto side = static_cast<Eigen::Index>(perm.size());
  Matrix<Real> out(side, side);
  for (Eigen::Index i = 0; i < side; ++i)
    for (Eigen::Index j = 0; j < side; ++j) out(i, j) = m.data(perm[i], perm[j]);
  return {std::move(labels), std::move(out)};
}

template <typename Real>
std::vector<std::string> names_of(const OperatorMatrix<Real>& m) {
  std::vector<std::string> out;
  for (const Label& l : m.labels) out.push_back(l.name);
  return out;
}

/// Traces out the named systems; the rest keep their relative order.
template <typename Real>
OperatorMatrix<Real> partial_trace(const OperatorMatrix<Real>& m,
                                   const std::vector<std::string>& traced) {
  std::vector<std::size_t> out_pos;
  std::vector<std::size_t> keep_pos;
  std::vector<Label> kept;
  for (const std::string& name : traced) out_pos.push_back(position_of(m.labels, name));
  for (std::size_t p = 0; p < m.labels.size(); ++p) {
    if (std::find(out_pos.begin(), out_pos.end(), p) != out_pos.end()) continue;
    keep_pos.push_back(p);
    kept.push_back(m.labels[p]);
  }
  const std::vector<long> keep = offsets_of(m.labels, keep_pos);
  const std::vector<long> trace = offsets_of(m.labels, out_pos);
  const auto side = static_cast<Eigen::Index>(keep.size());
  Matrix<Real> out = Matrix<Real>::Zero(side, side);
  for (Eigen::Index i = 0; i < side; ++i)
    for (Eigen::Index j = 0; j < side; ++j)
      for (long t : trace) out(i, j) += m.data(keep[i] + t, keep[j] + t);
  return {std::move(kept), std::move(out)};
}

/// Transposes the named tensor factors only.
template <typename Real>
OperatorMatrix<Real> partial_transpose(const OperatorMatrix<Real>& m,
                                       const std::vector<std::string>& systems) {
  std::vector<std::size_t> selected;
  for (const std::string& name : systems) selected.push_back(position_of(m.labels, name));
  const std::vector<long> strides = strides_of(m.labels);
  const Eigen::Index side = m.side();
  // part[i]: contribution of the selected digits to index i.
  std::vector<long> part(static_cast<std::size_t>(side), 0);
  for (Eigen::Index i = 0; i < side; ++i)
    for (std::size_t p : selected) part[i] += ((i / strides[p]) % m.labels[p].dim) * strides[p];
  Matrix<Real> out(side, side);
  for (Eigen::Index i = 0; i < side; ++i)
    for (Eigen::Index j = 0; j < side; ++j)
      out(i - part[i] + part[j], j - part[j] + part[i]) = m.data(i, j);
  return {m.labels, std::move(out)};
}

/// Largest absolute entry.
template <typename Real>
Real max_abs(const Matrix<Real>& m) {
  return m.size() == 0 ? Real(0) : m.cwiseAbs().maxCoeff();
}

template <typename Real>
Real hermiticity_error(const Matrix<Real>& m) {
  return max_abs<Real>(m - m.adjoint());
}

/// Smallest eigenvalue of the Hermitian part.
template <typename Real>
Real min_eigenvalue(const Matrix<Real>& m) {
  if (m.size() == 0) return Real(0);
  const Matrix<Real> h = (m + m.adjoint()) / Real(2);
  Eigen::SelfAdjointEigenSolver<Matrix<Real>> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

/// Side, then one row per line of "re im" pairs. Informal; for inspection.
template <typename Real>
void write_matrix(std::ostream& out, const OperatorMatrix<Real>& m) {
  const auto precision = out.precision(std::numeric_limits<Real>::max_digits10);
  out << m.side() << '\n';
  for (Eigen::Index i = 0; i < m.side(); ++i) {
    for (Eigen::Index j = 0; j < m.side(); ++j) {
      if (j) out << ' ';
      out << m.data(i, j).real() << ' ' << m.data(i, j).imag();
    }
    out << '\n';
  }
  out.precision(precision);
}

}  // namespace hot::oracle

#endif  // HOT_ORACLE_OPERATOR_HPP

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


#ifndef HOT_ORACLE_BASIS_HPP
#define HOT_ORACLE_BASIS_HPP

#include <cmath>
#include <cstdint>
#include <vector>

#include "hot/oracle/operator.hpp"
#include "hot/string_calculus.hpp"

namespace hot::oracle {

/// Hilbert-Schmidt orthonormal Hermitian basis of d x d matrices: I/sqrt(d)
/// first, then the d^2 - 1 generalized Gell-Mann matrices (symmetric,
/// antisymmetric, diagonal), normalized.
template <typename Real>
std::vector<Matrix<Real>> herm_basis(int d) {
  if (d < 1) throw std::invalid_argument("dimension must be positive");
  using C = Complex<Real>;
  std::vector<Matrix<Real>> out;
  out.push_back(Matrix<Real>::Identity(d, d) / std::sqrt(Real(d)));
  const Real r2 = std::sqrt(Real(2));
  for (int j = 0; j < d; ++j) {
    for (int k = j + 1; k < d; ++k) {
      Matrix<Real> sym = Matrix<Real>::Zero(d, d);
      sym(j, k) = sym(k, j) = C(1 / r2);
      out.push_back(std::move(sym));
      Matrix<Real> anti = Matrix<Real>::Zero(d, d);
      anti(j, k) = C(0, -1 / r2);
      anti(k, j) = C(0, 1 / r2);
      out.push_back(std::move(anti));
    }
  }
  for (int l = 1; l < d; ++l) {
    Matrix<Real> diag = Matrix<Real>::Zero(d, d);
    const Real norm = std::sqrt(Real(l) * Real(l + 1));
    for (int m = 0; m < l; ++m) diag(m, m) = C(1 / norm);
    diag(l, l) = C(-Real(l) / norm);
    out.push_back(std::move(diag));
  }
  return out;
}

/// Orthonormal operators spanning a subspace.
template <typename Real>
struct SubspaceBasis {
  std::vector<Label> labels;
  std::vector<OperatorMatrix<Real>> elements;
};

/// sum over b in D_x of prod_A (d_A^2 - 1 if b_A = 0, else 1).
inline std::uint64_t delta_dimension(const TypeExpr& x) {
  const std::vector<Label> labels = elementary_systems(x);
  const WordSet d = build_D(x);
  const std::size_t n = labels.size();
  std::uint64_t total = 0;
  for (std::uint64_t w : d.words()) {
    std::uint64_t term = 1;
    for (std::size_t p = 0; p < n; ++p)
      if (bit_at(w, n, p) == 0) term *= static_cast<std::uint64_t>(labels[p].dim) * labels[p].dim - 1;
    total += term;
  }
  return total;
}

/// Visits every product basis element of L_b: traceless factors where the
/// bit is 0, I/sqrt(d) where it is 1.
template <typename Real, typename Visit>
void for_each_word_element(const std::vector<Label>& labels, std::uint64_t word, Visit&& visit) {
  const std::size_t n = labels.size();
  std::vector<std::vector<Matrix<Real>>> factors;
  for (std::size_t p = 0; p < n; ++p) {
    std::vector<Matrix<Real>> basis = herm_basis<Real>(labels[p].dim);
    if (bit_at(word, n, p) == 1) {
      basis.resize(1);
    } else {
      basis.erase(basis.begin());
    }
    factors.push_back(std::move(basis));
  }
  const auto grow = [&](const auto& self, std::size_t p, const Matrix<Real>& partial) -> void {
    if (p == n) {
      visit(partial);
      return;
    }
    for (const Matrix<Real>& f : factors[p]) {
      const Eigen::Index m = f.rows();
      Matrix<Real> next(partial.rows() * m, partial.cols() * m);
      for (Eigen::Index i = 0; i < partial.rows(); ++i)
        for (Eigen::Index j = 0; j < partial.cols(); ++j) next.block(i * m, j * m, m, m) = partial(i, j) * f;
      self(self, p + 1, next);
    }
  };
  grow(grow, 0, Matrix<Real>::Identity(1, 1));
}

/// Basis of Delta_x, the direct sum of L_b over b in D_x.
template <typename Real>
SubspaceBasis<Real> delta_basis(const TypeExpr& x) {
  SubspaceBasis<Real> out;
  out.labels = elementary_systems(x);
  dimension_of(out.labels);
  const WordSet d = build_D(x);
  for (std::uint64_t w : d.words())
    for_each_word_element<Real>(out.labels, w, [&](const Matrix<Real>& m) {
      out.elements.push_back({out.labels, m});
    });
  return out;
}

/// The identity component of one tensor factor: Tr_p(M) (x) I_p / d_p in place.
template <typename Real>
Matrix<Real> identity_part(const Matrix<Real>& m, const std::vector<Label>& labels, std::size_t p) {
  const std::vector<long> strides = strides_of(labels);
  const long d = labels[p].dim;
  const long stride = strides[p];
  const Eigen::Index side = m.rows();
  Matrix<Real> out = Matrix<Real>::Zero(side, side);
  for (Eigen::Index i = 0; i < side; ++i) {
    const long di = (i / stride) % d;
    const long i0 = i - di * stride;
    for (Eigen::Index j = 0; j < side; ++j) {
      const long dj = (j / stride) % d;
      if (di != dj) continue;
      const long j0 = j - dj * stride;
      Complex<Real> sum = 0;
      for (long k = 0; k < d; ++k) sum += m(i0 + k * stride, j0 + k * stride);
      out(i, j) = sum / Real(d);
    }
  }
  return out;
}

/// Orthogonal projection of M onto the span of L_b for b in `words`, whose
/// universe must list the systems of M in order.
template <typename Real>
Matrix<Real> project_onto_words(const OperatorMatrix<Real>& m, const WordSet& words) {
  const std::size_t n = m.labels.size();
  for (std::size_t p = 0; p < n; ++p)
    if (words.universe().at(p) != m.labels[p].name)
      throw std::invalid_argument("word universe does not match the operator's systems");
  const auto any_with_prefix = [&](std::uint64_t prefix, std::size_t len) {
    const std::uint64_t lo = prefix << (n - len);
    const std::uint64_t hi = (prefix + 1) << (n - len);
    auto it = std::lower_bound(words.words().begin(), words.words().end(), lo);
    return it != words.words().end() && *it < hi;
  };
  Matrix<Real> total = Matrix<Real>::Zero(m.side(), m.side());
  const auto split = [&](const auto& self, std::size_t p, std::uint64_t prefix,
                         const Matrix<Real>& part) -> void {
    if (p == n) {
      total += part;
      return;
    }
    const Matrix<Real> id = identity_part<Real>(part, m.labels, p);
    if (any_with_prefix(prefix << 1, p + 1)) self(self, p + 1, prefix << 1, part - id);
    if (any_with_prefix((prefix << 1) | 1, p + 1)) self(self, p + 1, (prefix << 1) | 1, id);
  };
  if (!words.empty()) split(split, 0, 0, m.data);
  return total;
}

}  // namespace hot::oracle

#endif  // HOT_ORACLE_BASIS_HPP

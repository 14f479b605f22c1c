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


#ifndef HOT_ORACLE_LINK_HPP
#define HOT_ORACLE_LINK_HPP

#include <string>
#include <vector>

#include "hot/oracle/operator.hpp"
#include "hot/word_set.hpp"

namespace hot::oracle {

/// R * S over the systems the two operators share:
///
///   (R*S)[(a b),(a' b')] = sum_{s,t} R[(a s),(a' t)] S[(s b),(t b')]
///
/// which is Tr_shared[(R (x) I)(I (x) S^T_shared)] written out. The result
/// lists R's own systems, then S's.
template <typename Real>
OperatorMatrix<Real> link_product(const OperatorMatrix<Real>& r, const OperatorMatrix<Real>& s) {
  std::vector<std::string> r_only, shared, s_only;
  std::vector<Label> labels;
  for (const Label& l : r.labels) {
    if (has_label(s.labels, l.name)) {
      if (s.labels[position_of(s.labels, l.name)].dim != l.dim)
        throw std::invalid_argument("link product: system '" + l.name +
                                    "' has different dimensions");
      shared.push_back(l.name);
    } else {
      r_only.push_back(l.name);
      labels.push_back(l);
    }
  }
  for (const Label& l : s.labels) {
    if (has_label(r.labels, l.name)) continue;
    s_only.push_back(l.name);
    labels.push_back(l);
  }
  std::vector<std::string> r_order = r_only;
  r_order.insert(r_order.end(), shared.begin(), shared.end());
  std::vector<std::string> s_order = shared;
  s_order.insert(s_order.end(), s_only.begin(), s_only.end());
  const OperatorMatrix<Real> rr = reorder(r, r_order);
  const OperatorMatrix<Real> ss = reorder(s, s_order);

  const long side = dimension_of(labels);
  Eigen::Index ds = 1;
  for (const std::string& name : shared) ds *= r.labels[position_of(r.labels, name)].dim;
  const Eigen::Index da = rr.side() / ds;
  const Eigen::Index db = ss.side() / ds;
  Matrix<Real> out = Matrix<Real>::Zero(side, side);
  for (Eigen::Index si = 0; si < ds; ++si) {
    for (Eigen::Index ti = 0; ti < ds; ++ti) {
      const auto block = ss.data.block(si * db, ti * db, db, db);
      for (Eigen::Index a = 0; a < da; ++a) {
        for (Eigen::Index a2 = 0; a2 < da; ++a2) {
          const Complex<Real> coeff = rr.data(a * ds + si, a2 * ds + ti);
          if (coeff == Complex<Real>(0)) continue;
          out.block(a * db, a2 * db, db, db) += coeff * block;
        }
      }
    }
  }
  return {std::move(labels), std::move(out)};
}

/// Phi_AB = sum_{i,j} |ii><jj|.
template <typename Real>
OperatorMatrix<Real> phi(const Label& a, const Label& b) {
  if (a.dim != b.dim) throw std::invalid_argument("phi needs equal dimensions");
  const int d = a.dim;
  Matrix<Real> m = Matrix<Real>::Zero(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i * d + i, j * d + j) = 1;
  return {{a, b}, std::move(m)};
}

/// C_AB(R) = R * Phi_AB.
template <typename Real>
OperatorMatrix<Real> numeric_contraction(const OperatorMatrix<Real>& r, const std::string& a,
                                         const std::string& b) {
  const Label la = r.labels[position_of(r.labels, a)];
  const Label lb = r.labels[position_of(r.labels, b)];
  if (la.dim != lb.dim)
    throw std::invalid_argument("cannot contract " + a + " with " + b +
                                ": dimensions differ");
  return link_product(r, phi<Real>(la, lb));
}

/// Contracts every pair in turn.
template <typename Real>
OperatorMatrix<Real> numeric_contraction(OperatorMatrix<Real> r, const ContractionSpec& pairs) {
  for (const auto& [a, b] : pairs.pairs()) r = numeric_contraction(r, a, b);
  return r;
}

}  // namespace hot::oracle

#endif  // HOT_ORACLE_LINK_HPP

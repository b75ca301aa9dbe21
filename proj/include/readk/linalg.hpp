// Copyright 2026 The readk Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef READK_LINALG_HPP_
#define READK_LINALG_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "readk/field.hpp"

namespace readk {

// Dense matrices over F_p. Entries are canonical residues; products and
// eliminations go through the free functions below, never through Eigen's
// own arithmetic (which would not reduce modulo p).
using FMatrix = Eigen::Matrix<Elem, Eigen::Dynamic, Eigen::Dynamic>;
using FRowVector = Eigen::Matrix<Elem, 1, Eigen::Dynamic>;
using FVector = Eigen::Matrix<Elem, Eigen::Dynamic, 1>;

template <typename DerivedA, typename DerivedB>
FMatrix mat_mul(const PrimeField& field, const Eigen::MatrixBase<DerivedA>& a,
                const Eigen::MatrixBase<DerivedB>& b) {
  eigen_assert(a.cols() == b.rows());
  FMatrix out = FMatrix::Zero(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index k = 0; k < a.cols(); ++k) {
      const Elem aik = a(i, k);
      if (aik == 0) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j) {
        out(i, j) = field.fma(out(i, j), aik, b(k, j));
      }
    }
  }
  return out;
}

template <typename DerivedA, typename DerivedB>
FMatrix mat_add(const PrimeField& field, const Eigen::MatrixBase<DerivedA>& a,
                const Eigen::MatrixBase<DerivedB>& b) {
  eigen_assert(a.rows() == b.rows() && a.cols() == b.cols());
  FMatrix out(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out(i, j) = field.add(a(i, j), b(i, j));
    }
  }
  return out;
}

template <typename Derived>
FMatrix mat_scale(const PrimeField& field, const Eigen::MatrixBase<Derived>& a,
                  Elem c) {
  FMatrix out(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out(i, j) = field.mul(a(i, j), c);
    }
  }
  return out;
}

// Reduced row echelon form by Gaussian elimination; the pivot of each column
// is the first nonzero entry at or below the current row.
struct Echelon {
  FMatrix reduced;
  std::vector<Eigen::Index> pivot_cols;
};

template <typename Derived>
Echelon row_echelon(const PrimeField& field,
                    const Eigen::MatrixBase<Derived>& m) {
  Echelon e{m, {}};
  FMatrix& r = e.reduced;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < r.cols() && row < r.rows(); ++col) {
    Eigen::Index piv = row;
    while (piv < r.rows() && r(piv, col) == 0) ++piv;
    if (piv == r.rows()) continue;
    r.row(row).swap(r.row(piv));
    const Elem inv = field.inv(r(row, col));
    for (Eigen::Index j = col; j < r.cols(); ++j) {
      r(row, j) = field.mul(r(row, j), inv);
    }
    for (Eigen::Index i = 0; i < r.rows(); ++i) {
      if (i == row || r(i, col) == 0) continue;
      const Elem f = field.neg(r(i, col));
      for (Eigen::Index j = col; j < r.cols(); ++j) {
        r(i, j) = field.fma(r(i, j), f, r(row, j));
      }
    }
    e.pivot_cols.push_back(col);
    ++row;
  }
  return e;
}

template <typename Derived>
std::size_t rank(const PrimeField& field, const Eigen::MatrixBase<Derived>& m) {
  return row_echelon(field, m).pivot_cols.size();
}

// Columns form a basis of { v : m v = 0 }, one per free column in
// increasing order.
template <typename Derived>
FMatrix null_space(const PrimeField& field,
                   const Eigen::MatrixBase<Derived>& m) {
  const Echelon e = row_echelon(field, m);
  const Eigen::Index n = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (auto c : e.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<Eigen::Index> free_cols;
  for (Eigen::Index c = 0; c < n; ++c) {
    if (!is_pivot[static_cast<std::size_t>(c)]) free_cols.push_back(c);
  }
  FMatrix basis = FMatrix::Zero(n, static_cast<Eigen::Index>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const Eigen::Index fc = free_cols[k];
    const auto col = static_cast<Eigen::Index>(k);
    basis(fc, col) = 1;
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) {
      basis(e.pivot_cols[r], col) =
          field.neg(e.reduced(static_cast<Eigen::Index>(r), fc));
    }
  }
  return basis;
}

// Inverse of a square matrix, or nullopt when it is singular.
template <typename Derived>
std::optional<FMatrix> mat_inverse(const PrimeField& field,
                                   const Eigen::MatrixBase<Derived>& m) {
  const Eigen::Index n = m.rows();
  FMatrix aug(n, 2 * n);
  aug << m, FMatrix::Identity(n, n);
  const Echelon e = row_echelon(field, aug);
  if (static_cast<Eigen::Index>(e.pivot_cols.size()) < n ||
      e.pivot_cols[static_cast<std::size_t>(n - 1)] != n - 1) {
    return std::nullopt;
  }
  return FMatrix(e.reduced.rightCols(n));
}

inline FMatrix identity_matrix(Eigen::Index n) {
  return FMatrix::Identity(n, n);
}

inline bool is_zero_matrix(const FMatrix& m) {
  return (m.array() == 0).all();
}

}  // namespace readk

#endif  // READK_LINALG_HPP_

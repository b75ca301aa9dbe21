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

#include "readk/unimatrix.hpp"

#include <algorithm>

namespace readk {

UniPoly uni_add(const PrimeField& field, const UniPoly& a, const UniPoly& b) {
  std::vector<Elem> c(std::max(a.coeffs.size(), b.coeffs.size()), 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) c[i] = a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) {
    c[i] = field.add(c[i], b.coeffs[i]);
  }
  return UniPoly(std::move(c));
}

UniPoly uni_mul(const PrimeField& field, const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Elem> c(a.coeffs.size() + b.coeffs.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      c[i + j] = field.fma(c[i + j], a.coeffs[i], b.coeffs[j]);
    }
  }
  return UniPoly(std::move(c));
}

UniPoly uni_scale(const PrimeField& field, const UniPoly& a, Elem c) {
  std::vector<Elem> out(a.coeffs.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field.mul(a.coeffs[i], c);
  return UniPoly(std::move(out));
}

UniMatrix UniMatrix::from_constant(const FMatrix& m) {
  UniMatrix out(static_cast<std::size_t>(m.rows()),
                static_cast<std::size_t>(m.cols()));
  for (std::size_t r = 0; r < out.rows(); ++r) {
    for (std::size_t c = 0; c < out.cols(); ++c) {
      out(r, c) = UniPoly::constant(
          m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)));
    }
  }
  return out;
}

UniMatrix UniMatrix::identity(std::size_t n) {
  UniMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = UniPoly::constant(1);
  return out;
}

std::size_t UniMatrix::degree() const {
  std::size_t d = 0;
  for (const auto& e : entries_) d = std::max(d, e.degree());
  return d;
}

bool UniMatrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const UniPoly& p) { return p.is_zero(); });
}

FMatrix UniMatrix::evaluate(const PrimeField& field, Elem x) const {
  FMatrix out(static_cast<Eigen::Index>(rows_), static_cast<Eigen::Index>(cols_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          (*this)(r, c).evaluate(field, x);
    }
  }
  return out;
}

FMatrix UniMatrix::constant_part() const {
  FMatrix out(static_cast<Eigen::Index>(rows_), static_cast<Eigen::Index>(cols_));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const auto& p = (*this)(r, c);
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          p.is_zero() ? 0 : p.coeffs[0];
    }
  }
  return out;
}

UniMatrix mul_const_left(const PrimeField& field, const FMatrix& c,
                         const UniMatrix& m) {
  UniMatrix out(static_cast<std::size_t>(c.rows()), m.cols());
  for (std::size_t i = 0; i < out.rows(); ++i) {
    for (std::size_t j = 0; j < out.cols(); ++j) {
      UniPoly acc;
      for (std::size_t k = 0; k < m.rows(); ++k) {
        const Elem s =
            c(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k));
        if (s != 0) acc = uni_add(field, acc, uni_scale(field, m(k, j), s));
      }
      out(i, j) = std::move(acc);
    }
  }
  return out;
}

UniMatrix mul_const_right(const PrimeField& field, const UniMatrix& m,
                          const FMatrix& c) {
  UniMatrix out(m.rows(), static_cast<std::size_t>(c.cols()));
  for (std::size_t i = 0; i < out.rows(); ++i) {
    for (std::size_t j = 0; j < out.cols(); ++j) {
      UniPoly acc;
      for (std::size_t k = 0; k < m.cols(); ++k) {
        const Elem s =
            c(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(j));
        if (s != 0) acc = uni_add(field, acc, uni_scale(field, m(i, k), s));
      }
      out(i, j) = std::move(acc);
    }
  }
  return out;
}

UniMatrix uni_mat_mul(const PrimeField& field, const UniMatrix& a,
                      const UniMatrix& b) {
  UniMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      UniPoly acc;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        acc = uni_add(field, acc, uni_mul(field, a(i, k), b(k, j)));
      }
      out(i, j) = std::move(acc);
    }
  }
  return out;
}

}  // namespace readk

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

#ifndef READK_UNIMATRIX_HPP_
#define READK_UNIMATRIX_HPP_

#include <cstddef>
#include <vector>

#include "readk/field.hpp"
#include "readk/linalg.hpp"

namespace readk {

// Univariate polynomial, coefficients lowest degree first, no trailing zeros.
struct UniPoly {
  std::vector<Elem> coeffs;

  UniPoly() = default;
  explicit UniPoly(std::vector<Elem> c) : coeffs(std::move(c)) { trim(); }
  static UniPoly constant(Elem c) { return UniPoly({c}); }
  static UniPoly monomial(Elem c, std::size_t degree) {
    std::vector<Elem> v(degree + 1, 0);
    v[degree] = c;
    return UniPoly(std::move(v));
  }

  bool is_zero() const { return coeffs.empty(); }
  // Degree of the zero polynomial is reported as 0.
  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  Elem evaluate(const PrimeField& field, Elem x) const {
    Elem acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
      acc = field.fma(*it, acc, x);
    }
    return acc;
  }
  void trim() {
    while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  }
  bool operator==(const UniPoly&) const = default;
};

UniPoly uni_add(const PrimeField& field, const UniPoly& a, const UniPoly& b);
UniPoly uni_mul(const PrimeField& field, const UniPoly& a, const UniPoly& b);
UniPoly uni_scale(const PrimeField& field, const UniPoly& a, Elem c);

// rows x cols grid of univariate polynomials in a single (implicit) variable.
class UniMatrix {
 public:
  UniMatrix() = default;
  UniMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  static UniMatrix from_constant(const FMatrix& m);
  static UniMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  UniPoly& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const UniPoly& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::size_t degree() const;
  bool is_constant() const { return degree() == 0; }
  bool is_zero() const;
  FMatrix evaluate(const PrimeField& field, Elem x) const;
  // Constant term of each entry.
  FMatrix constant_part() const;

  bool operator==(const UniMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<UniPoly> entries_;
};

// Product of a constant matrix with a univariate matrix (either side).
UniMatrix mul_const_left(const PrimeField& field, const FMatrix& c,
                         const UniMatrix& m);
UniMatrix mul_const_right(const PrimeField& field, const UniMatrix& m,
                          const FMatrix& c);
// Product of two univariate matrices in the same variable.
UniMatrix uni_mat_mul(const PrimeField& field, const UniMatrix& a,
                      const UniMatrix& b);

}  // namespace readk

#endif  // READK_UNIMATRIX_HPP_

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

#ifndef READK_POLY_HPP_
#define READK_POLY_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "readk/field.hpp"

namespace readk {

using Exponent = std::uint16_t;

// Partial assignment var -> value. Ordered so iteration is deterministic.
using Assignment = std::map<std::size_t, Elem>;

class PolyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Multivariate polynomial over a prime field, stored as a sorted list of
// (exponent vector, coefficient) terms. Exponent vectors are dense (one entry
// per variable) and sorted lexicographically; no stored coefficient is zero.
class SparsePoly {
 public:
  struct Term {
    std::vector<Exponent> exponents;
    Elem coeff;
  };

  SparsePoly() = default;
  SparsePoly(PrimeField field, std::size_t num_vars)
      : field_(field), num_vars_(num_vars) {}

  static SparsePoly constant(PrimeField field, std::size_t num_vars, Elem c);
  static SparsePoly variable(PrimeField field, std::size_t num_vars,
                             std::size_t var);
  // Combines repeated monomials and drops zero coefficients. Coefficients
  // are reduced modulo p.
  static SparsePoly from_terms(PrimeField field, std::size_t num_vars,
                               std::vector<Term> terms);
  // Same, from flat storage: exps.size() == coeffs.size() * num_vars.
  static SparsePoly from_flat(PrimeField field, std::size_t num_vars,
                              std::vector<Exponent> exps,
                              std::vector<Elem> coeffs);

  const PrimeField& field() const { return field_; }
  std::size_t num_vars() const { return num_vars_; }
  std::size_t size() const { return coeffs_.size(); }
  bool is_zero() const { return coeffs_.empty(); }

  std::span<const Exponent> exponents(std::size_t term) const {
    return {exps_.data() + term * num_vars_, num_vars_};
  }
  Elem coeff(std::size_t term) const { return coeffs_[term]; }

  // Coefficient of the given monomial (0 when absent).
  Elem coefficient(std::span<const Exponent> monomial) const;

  std::size_t total_degree() const;
  std::size_t degree_in(std::size_t var) const;
  // Max over variables of degree_in.
  std::size_t individual_degree() const;
  // True iff some term has a nonzero exponent in var.
  bool mentions(std::size_t var) const { return degree_in(var) > 0; }

  Elem evaluate(std::span<const Elem> point) const;

  bool operator==(const SparsePoly& other) const;

  std::vector<Term> terms() const;

 private:
  PrimeField field_;
  std::size_t num_vars_ = 0;
  std::vector<Exponent> exps_;
  std::vector<Elem> coeffs_;
};

enum class PolyOp { kAdd, kSub, kMul };

// Throws PolyError on field or arity mismatch.
SparsePoly poly_arith(const SparsePoly& f, const SparsePoly& g, PolyOp kind);

inline SparsePoly operator+(const SparsePoly& f, const SparsePoly& g) {
  return poly_arith(f, g, PolyOp::kAdd);
}
inline SparsePoly operator-(const SparsePoly& f, const SparsePoly& g) {
  return poly_arith(f, g, PolyOp::kSub);
}
inline SparsePoly operator*(const SparsePoly& f, const SparsePoly& g) {
  return poly_arith(f, g, PolyOp::kMul);
}

SparsePoly scale(const SparsePoly& f, Elem c);

// f|_{x_S = a}. The result keeps num_vars; assigned variables get exponent 0.
SparsePoly poly_substitute(const SparsePoly& f, const Assignment& assignment);

// Rename variables: variable i of f becomes variable mapping[i] of a
// polynomial in new_num_vars variables.
SparsePoly poly_rename(const SparsePoly& f, std::span<const std::size_t> mapping,
                       std::size_t new_num_vars);

// Human-readable form in ascending monomial order, e.g. "3 + 100*x0*x1 +
// x0^2". Variables are 0-based.
std::string to_string(const SparsePoly& f);

}  // namespace readk

#endif  // READK_POLY_HPP_

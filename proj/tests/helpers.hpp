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

// Small constructors shared by the test files.

#ifndef READK_TESTS_HELPERS_HPP_
#define READK_TESTS_HELPERS_HPP_

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

#include "readk/abp.hpp"
#include "readk/poly.hpp"

namespace testing_helpers {

using readk::Elem;
using readk::PrimeField;

// Entry given as coefficient list, constant term first; negative values are
// reduced.
using Entry = std::vector<std::int64_t>;
using Mat = std::vector<std::vector<Entry>>;

inline readk::Layer layer(const PrimeField& f, std::optional<std::size_t> var,
                          const Mat& m) {
  readk::UniMatrix u(m.size(), m[0].size());
  for (std::size_t r = 0; r < m.size(); ++r) {
    for (std::size_t c = 0; c < m[r].size(); ++c) {
      std::vector<Elem> coeffs;
      for (std::int64_t v : m[r][c]) coeffs.push_back(f.reduce(v));
      u(r, c) = readk::UniPoly(coeffs);
    }
  }
  return {var, u, false};
}

inline readk::ObliviousAbp abp(const PrimeField& f, std::size_t n,
                               std::vector<readk::Layer> layers) {
  return readk::ObliviousAbp(f, n, std::move(layers));
}

// Width-1 program whose layers are the variable itself, in `order`.
inline readk::ObliviousAbp monomial_abp(const PrimeField& f, std::size_t n,
                                        std::initializer_list<std::size_t> order) {
  std::vector<readk::Layer> ls;
  for (std::size_t v : order) ls.push_back(layer(f, v, {{{0, 1}}}));
  return abp(f, n, ls);
}

inline readk::SparsePoly var(const PrimeField& f, std::size_t n, std::size_t i) {
  return readk::SparsePoly::variable(f, n, i);
}

inline readk::SparsePoly cst(const PrimeField& f, std::size_t n, std::int64_t c) {
  return readk::SparsePoly::constant(f, n, f.reduce(c));
}

}  // namespace testing_helpers

#endif  // READK_TESTS_HELPERS_HPP_

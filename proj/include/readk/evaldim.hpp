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

#ifndef READK_EVALDIM_HPP_
#define READK_EVALDIM_HPP_

#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <stdexcept>
#include <vector>

#include "readk/abp.hpp"
#include "readk/field.hpp"
#include "readk/poly.hpp"

namespace readk {

class EvalDimError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EvalDimOptions {
  // Independent random substitutions for R; the maximum rank is kept.
  std::size_t trials = 3;
  std::uint64_t seed = 0x5eed;
  // Also search the (d+1)-grid for assignments realizing a basis.
  bool want_basis = true;
  // Largest grid scanned for basis assignments.
  std::size_t grid_guard = 1'000'000;
};

struct EvalDimReport {
  std::vector<std::size_t> s;
  std::vector<std::size_t> t;
  std::vector<std::size_t> r;
  std::size_t dimension = 0;
  // Assignments to s (same order) whose restrictions form a basis.
  // Empty when not requested or when the grid exceeds the guard.
  std::vector<std::vector<Elem>> basis_assignments;
};

// Rank of the coefficient matrix with rows indexed by S-monomials and
// columns by T-monomials. Variables in R get random values first, so with R
// nonempty the result is a lower bound that is exact with high probability.
EvalDimReport eval_dim(const SparsePoly& f, std::span<const std::size_t> s,
                       std::span<const std::size_t> t,
                       std::span<const std::size_t> r,
                       const EvalDimOptions& options = {});

// Exact rank of the partial derivative matrix, no randomness.
std::size_t partial_derivative_rank(const SparsePoly& f,
                                    std::span<const std::size_t> s,
                                    std::span<const std::size_t> t);

struct Roabp {
  ObliviousAbp abp;
  // order[j] is the variable read by layer j.
  std::vector<std::size_t> order;
  // Output width of layers 0..n-2 (the interior cuts).
  std::vector<std::size_t> width_profile;
};

std::vector<std::size_t> realized_cut_widths(const ObliviousAbp& a);

// Evaluation dimension at each interior cut of `order`.
std::vector<std::size_t> roabp_width_profile(const SparsePoly& f,
                                             std::span<const std::size_t> order);

// Read-once program in `order` whose cut widths equal roabp_width_profile.
Roabp roabp_synthesize(const SparsePoly& f, std::span<const std::size_t> order,
                       std::size_t grid_guard = 1'000'000);

// Number of maximal runs of layers reading `prefix`. Layers with constant
// matrices (including padding) are skipped.
std::size_t k_gap_check(const ObliviousAbp& a,
                        const std::set<std::size_t>& prefix);
// Prefix {0, ..., i-1}.
std::size_t k_gap_check(const ObliviousAbp& a, std::size_t prefix_len);

// Largest k_gap_check over the prefixes of `order`, with the first prefix
// length attaining it.
struct GapProfile {
  std::vector<std::size_t> gaps;  // gaps[i] for prefix length i = 0..n
  std::size_t max_gap = 0;
  std::size_t worst_prefix = 0;
};
GapProfile k_gap_profile(const ObliviousAbp& a,
                         std::span<const std::size_t> order);

// Read-once program in `order` computing the same polynomial. The width at
// each cut is the product of rows*cols over the runs of prefix layers, at most
// w^(2t) for t the gap. Throws if some prefix has more than `k` runs.
Roabp k_gap_to_roabp(const ObliviousAbp& a, std::span<const std::size_t> order,
                     std::size_t k);
// Identity order, k = read multiplicity.
Roabp k_gap_to_roabp(const ObliviousAbp& a);

// Requires every pass to read the same permutation.
Roabp k_pass_to_roabp(const ObliviousAbp& a);

}  // namespace readk

#endif  // READK_EVALDIM_HPP_

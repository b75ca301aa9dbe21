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

#ifndef READK_HARDPOLY_HPP_
#define READK_HARDPOLY_HPP_

#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "readk/abp.hpp"
#include "readk/evaldim.hpp"
#include "readk/poly.hpp"

namespace readk {

class HardPolyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Family { kPn, kQn };

struct HardFamilyInstance {
  Family family = Family::kPn;
  std::size_t n = 0;
  // Unset when the symbolic form exceeds the guard.
  std::optional<SparsePoly> polynomial;
  ObliviousAbp realization;
  std::vector<std::string> var_names;
  // Q_n only: matchings[i][j] is the 0-based y partner of x_j in matching i.
  std::vector<std::vector<std::size_t>> matchings;
};

// Symbolic forms are built up to this n.
inline constexpr std::size_t kPnSymbolicMax = 4;
inline constexpr std::size_t kQnSymbolicMax = 6;

// Variable x_{i,j} (1-based) has index (i-1)n + (j-1).
std::size_t pn_var(std::size_t n, std::size_t i, std::size_t j);

// Product of all row sums and all column sums of an n x n matrix of
// variables, realized by a width-2 program reading row-major then
// column-major.
HardFamilyInstance gen_pn(const PrimeField& field, std::size_t n);

// Matching i (0-based) pairs x_j with y_{(j + i + 1) mod n} (0-based), i.e.
// y_{((j+i-1) mod n)+1} in 1-based terms.
std::vector<std::vector<std::size_t>> qn_matchings(std::size_t n);

// Variables x_j = j, y_j = n + j, z_i = 2n + i (0-based). The realization is
// the sequential sum of the n width-2 read-once programs
// z_i * prod_j (x_j + y_{sigma_i(j)}).
HardFamilyInstance gen_qn(const PrimeField& field, std::size_t n);

struct BlockPartition {
  std::vector<std::size_t> u, v, w;
  // Chosen blocks as layer intervals [begin, end) of the normalized program.
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  std::vector<std::size_t> block_ids;
  std::size_t r = 0;
  std::size_t k = 0;
  std::size_t num_layers = 0;
  // |W| <= k^2 * layers / r.
  bool w_bound_holds = false;
  // r = 10k^2 fits in the layer count, so the n/10 form is meaningful.
  bool n_over_10_applicable = false;
};

// Splits the normalized program into r contiguous blocks of near-equal size
// and picks k of them covering every read of as many variables as possible
// (exhaustive over all k-subsets, first maximum in lexicographic order, or
// a greedy choice when `greedy`).
BlockPartition block_partition(const ObliviousAbp& a, std::size_t r,
                               bool greedy = false);

struct Elimination {
  std::vector<std::size_t> s;
  std::vector<std::vector<Elem>> assignments;  // w+1 points on s
  std::vector<Elem> alpha;
  // sum_i alpha_i * part_j|_{s = a_i} for every part j >= 2.
  std::vector<Roabp> residuals;
};

// S is the first t variables of part 0's order; alpha is a nonzero kernel
// vector of the prefix row vectors of part 0 at the chosen points.
Elimination eliminate_summand(std::span<const Roabp> parts, std::size_t t);

// Oracle check of one elimination: alpha is nonzero, the alpha-combination
// of part 0's restrictions expands to zero, each residual expands to the
// matching combination of its part, and residual widths stay <= w(w+1).
struct EliminationCheck {
  bool alpha_nonzero = false;
  bool annihilates = false;
  bool residuals_match = false;
  std::size_t max_residual_width = 0;
  std::size_t width_bound = 0;
  bool ok() const {
    return alpha_nonzero && annihilates && residuals_match &&
           max_residual_width <= width_bound;
  }
};
EliminationCheck check_elimination(std::span<const Roabp> parts,
                                   std::size_t t, const Elimination& e);

// One step of the projection used in the induction: given a nonzero g in
// the span of restrictions of P_n on s (|s| = t < n), fixes every variable
// in t rows and t columns covering s, then the last row and column of the
// remaining block, leaving c * P_{n-t-1} for a nonzero constant c.
struct ProjectionResult {
  SparsePoly projected;  // renamed onto P_{n-t-1}'s row-major variables
  Elem scale = 0;
  bool matches = false;
};
ProjectionResult pn_projection_step(std::size_t n,
                                    std::span<const std::size_t> s,
                                    const SparsePoly& g, std::mt19937_64& rng);

struct ExperimentRow {
  std::string subset;  // e.g. "S=0,3;T=1,2"
  std::size_t size = 0;        // t for P_n, m for Q_n
  std::size_t dimension = 0;
  std::size_t floor = 0;
  bool pass = false;
};

// Every subset of each size in `sizes` (exhaustive), dimension against the
// complement, floor 2^ceil(sqrt t).
std::vector<ExperimentRow> experiment_pn_evaldim(
    const PrimeField& field, std::size_t n, std::span<const std::size_t> sizes);

// `trials` random disjoint (S, T) inside x and y covering at least 90% of
// them; z and the rest are substituted at random (3 draws). Floor 2^m for m
// the largest number of S-T edges in one matching.
std::vector<ExperimentRow> experiment_qn_evaldim(const PrimeField& field,
                                                 std::size_t n,
                                                 std::size_t trials,
                                                 std::uint64_t seed);

// S-T edges of the best matching.
std::size_t qn_cross_edges(std::size_t n, const std::vector<bool>& in_s,
                           const std::vector<bool>& in_t);

}  // namespace readk

#endif  // READK_HARDPOLY_HPP_

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

#ifndef READK_PIT_HPP_
#define READK_PIT_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "readk/abp.hpp"
#include "readk/field.hpp"

namespace readk {

class PitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class GeneratorKind { kGrid, kRandom, kExternal };

const char* generator_name(GeneratorKind kind);

struct GeneratorConfig {
  GeneratorKind kind = GeneratorKind::kGrid;
  // Random generator: seed, and point count (default (|vars| w d)^2).
  std::uint64_t seed = 1;
  std::optional<std::size_t> count;
  // External generator: full assignments over all variables; a stage uses
  // the distinct projections onto its variables.
  std::vector<std::vector<Elem>> external_points;
  // Refuse sets larger than this.
  std::size_t guard = 1'000'000;
};

struct HittingSet {
  std::vector<std::size_t> vars;
  std::vector<std::vector<Elem>> points;  // each aligned with vars
  GeneratorKind provenance = GeneratorKind::kGrid;
};

// Full grid {0..d}^|vars| in lexicographic order.
HittingSet grid_hitting_set(std::span<const std::size_t> vars, std::size_t d,
                            std::size_t guard = 1'000'000);

// Points meant to hit width-w, degree-d read-once programs over vars.
// `stream` separates the random streams of different callers.
HittingSet roabp_hitting_set(const PrimeField& field,
                             std::span<const std::size_t> vars, std::size_t w,
                             std::size_t d, const GeneratorConfig& config,
                             std::uint64_t stream = 0);

// ROABP hitting set for width w^(2k) (w itself when k = 1) over `order`.
HittingSet k_pass_hitting_set(const PrimeField& field, std::size_t w,
                              std::size_t d, std::size_t k,
                              std::span<const std::size_t> order,
                              const GeneratorConfig& config);

// One assignment per line, decimal field elements separated by whitespace,
// one per variable. Blank lines and lines starting with '#' are skipped.
std::vector<std::vector<Elem>> load_external_points(const std::string& path,
                                                    std::size_t num_vars,
                                                    const PrimeField& field);

// Subset chosen for one loop iteration: per-read-monotone pruning followed
// by regularly-interleaving pruning of the read sequence on `active`.
std::vector<std::size_t> choose_stage_vars(std::span<const std::size_t> reads,
                                           std::span<const std::size_t> active);

struct PitStage {
  std::vector<std::size_t> vars;
  HittingSet set;
  std::size_t width = 0;   // ROABP width the set is sized for
  std::size_t degree = 0;  // individual degree of the grid
};

// The loop of the algorithm: stages depend only on the read order, the
// declared width and the layer degrees, never on chosen points.
std::vector<PitStage> plan_read_k(const ObliviousAbp& a,
                                  const GeneratorConfig& config);

struct PitIteration {
  std::vector<std::size_t> vars;
  std::vector<Elem> point;
  std::size_t set_size = 0;
  std::size_t candidates_tried = 0;
};

struct PitVerdict {
  bool is_zero = true;
  std::optional<std::vector<Elem>> witness;
  std::vector<PitIteration> iterations;
  std::size_t planned_iterations = 0;
  std::size_t read_multiplicity = 0;
  std::size_t active_vars = 0;
  GeneratorKind provenance = GeneratorKind::kGrid;
};

struct PitOptions {
  GeneratorConfig generator;
  // Nonzeroness of a restriction is read off the expansion when its
  // estimate is at most this; otherwise the test recurses.
  std::size_t expansion_guard = kDefaultExpansionGuard;
};

PitVerdict read_k_pit(const ObliviousAbp& a, const PitOptions& options = {});

// 2 * 3^(k^2) * n^(1 - 1/2^(k-1)).
double iteration_bound(std::size_t n, std::size_t k);

// n^(1-p) - (n - n^p/r)^(1-p) >= (1-p)/r, decided with outward-rounded
// interval arithmetic.
bool iteration_bound_check(std::uint64_t n, double p, std::uint64_t r);

}  // namespace readk

#endif  // READK_PIT_HPP_

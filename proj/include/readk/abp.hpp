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

#ifndef READK_ABP_HPP_
#define READK_ABP_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "readk/field.hpp"
#include "readk/linalg.hpp"
#include "readk/poly.hpp"
#include "readk/sequences.hpp"
#include "readk/unimatrix.hpp"

namespace readk {

class AbpError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when an operation would exceed a configured size guard.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultExpansionGuard = 1'000'000;

// One layer of an oblivious ABP. A layer either reads one variable (all
// entries univariate in it) or is constant (var unset), which is what
// restriction leaves behind.
struct Layer {
  std::optional<std::size_t> var;
  UniMatrix matrix;
  // Identity layer added only to make every variable read exactly k times.
  bool padding = false;

  bool operator==(const Layer&) const = default;
};

// Layered oblivious ABP. The computed polynomial is the (1,1) entry of the
// product of the layer matrices; the first layer has one row and the last
// one column.
class ObliviousAbp {
 public:
  ObliviousAbp() = default;
  // Declared width and degree default to the realized ones.
  ObliviousAbp(PrimeField field, std::size_t num_vars, std::vector<Layer> layers,
               std::optional<std::size_t> declared_width = std::nullopt,
               std::optional<std::size_t> declared_degree = std::nullopt);

  const PrimeField& field() const { return field_; }
  std::size_t num_vars() const { return num_vars_; }
  const std::vector<Layer>& layers() const { return layers_; }
  std::size_t num_layers() const { return layers_.size(); }
  std::size_t width() const { return width_; }
  std::size_t degree() const { return degree_; }
  std::size_t realized_width() const;

  // Variables read by non-constant layers, in layer order.
  std::vector<std::size_t> read_order() const;
  std::vector<std::size_t> read_counts() const;
  // Sum over the layers reading each variable of their degrees.
  std::vector<std::size_t> variable_degrees() const;

  bool operator==(const ObliviousAbp&) const = default;

 private:
  PrimeField field_;
  std::size_t num_vars_ = 0;
  std::vector<Layer> layers_;
  std::size_t width_ = 1;
  std::size_t degree_ = 0;
};

struct AbpClass {
  // Tight k: the largest number of layers reading one variable.
  std::size_t read_multiplicity = 0;
  // Every pass reads the same permutation.
  bool is_k_pass = false;
  // The normalized read sequence splits into k permutations of all variables.
  bool is_varying_order_k_pass = false;
  // The k per-pass permutations when is_varying_order_k_pass.
  std::vector<std::vector<std::size_t>> pass_orders;
  // Copy where every variable is read exactly k times (identity layers
  // appended at the end, tagged as padding).
  ObliviousAbp normalized;
};

// Classifies A. Structural problems are rejected at construction time.
AbpClass abp_validate(const ObliviousAbp& a);

// Appends 1x1 identity layers so every variable is read exactly k times.
// Throws AbpError if some variable is already read more than k times.
ObliviousAbp abp_normalize(const ObliviousAbp& a, std::size_t k);

Elem abp_evaluate(const ObliviousAbp& a, std::span<const Elem> point);

// Number of dense coefficient slots the expansion needs: the product over
// variables of (sum of layer degrees reading it) + 1.
std::size_t expansion_estimate(const ObliviousAbp& a);

// Sum over all source-sink paths, expanded into a SparsePoly. Refuses with
// GuardExceeded when expansion_estimate exceeds `guard`.
SparsePoly abp_expand(const ObliviousAbp& a,
                      std::size_t guard = kDefaultExpansionGuard);

// Layers reading an assigned variable become constant layers.
ObliviousAbp abp_restrict(const ObliviousAbp& a, const Assignment& assignment);

// Multiplies constant layers into a neighbouring layer. The polynomial is
// unchanged; an ABP with only constant layers collapses to one 1x1 layer.
ObliviousAbp abp_fold_constants(const ObliviousAbp& a);

// Read sequence over the normalized program (padding layers included).
ReadSequence abp_read_sequence(const ObliviousAbp& a);

// weights[0]*A_0 + weights[1]*A_1 + ... for programs whose layers read the
// same variables in the same order; layers are joined block-diagonally so
// widths add up.
ObliviousAbp abp_parallel_sum(std::span<const ObliviousAbp> parts,
                              std::span<const Elem> weights);

// A_0 + A_1 + ... for programs in arbitrary orders, run one after another
// with an accumulator track; width grows by 2 and reads add up.
ObliviousAbp abp_sequential_sum(std::span<const ObliviousAbp> parts);

// Renames variable v to mapping[v] in a program over new_num_vars variables.
ObliviousAbp abp_rename(const ObliviousAbp& a,
                        std::span<const std::size_t> mapping,
                        std::size_t new_num_vars);

}  // namespace readk

#endif  // READK_ABP_HPP_

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

#ifndef READK_RANDOM_INSTANCES_HPP_
#define READK_RANDOM_INSTANCES_HPP_

#include <cstddef>
#include <random>
#include <span>
#include <vector>

#include "readk/abp.hpp"
#include "readk/evaldim.hpp"
#include "readk/field.hpp"
#include "readk/poly.hpp"

// Seeded generators shared by the tests, the acceptance suite and the CLI.
namespace readk {

using Rng = std::mt19937_64;

Elem random_elem(const PrimeField& field, Rng& rng);

// Degree <= d; zero with probability zero_prob.
UniPoly random_uni_poly(const PrimeField& field, Rng& rng, std::size_t d,
                        double zero_prob);

std::vector<std::size_t> random_permutation(Rng& rng, std::size_t n);

// Each of the n variables exactly k times, uniformly shuffled.
std::vector<std::size_t> random_read_k_order(Rng& rng, std::size_t n,
                                             std::size_t k);

// Layer j reads reads[j]; interior widths uniform in [1, w].
ObliviousAbp random_abp_in_order(const PrimeField& field, Rng& rng,
                                 std::size_t n,
                                 std::span<const std::size_t> reads,
                                 std::size_t w, std::size_t d,
                                 double zero_prob = 0.25);

ObliviousAbp random_read_k_abp(const PrimeField& field, Rng& rng, std::size_t n,
                               std::size_t k, std::size_t w, std::size_t d);

// k passes; one permutation repeated, or a fresh one per pass.
ObliviousAbp random_k_pass_abp(const PrimeField& field, Rng& rng, std::size_t n,
                               std::size_t k, std::size_t w, std::size_t d,
                               bool same_order);

// Same polynomial, matrices conjugated by random invertible changes of basis
// at every interior cut.
ObliviousAbp gauge_transform(const ObliviousAbp& a, Rng& rng);

// A - gauge(A) for a random A of width max(1, w/2): identically zero but with
// no zero layer.
ObliviousAbp planted_zero_abp(const PrimeField& field, Rng& rng, std::size_t n,
                              std::size_t k, std::size_t w, std::size_t d);

// Entries are c * prod (x - a) with roots inside the grid {0..d}, so many
// grid restrictions vanish.
ObliviousAbp root_heavy_abp(const PrimeField& field, Rng& rng, std::size_t n,
                            std::size_t k, std::size_t w, std::size_t d);

enum class CorpusKind { kGeneric, kPlantedZero, kRootHeavy };

// One instance of the PIT corpus, resampled until the expansion estimate is
// within `guard` so the oracle stays available.
ObliviousAbp random_corpus_abp(const PrimeField& field, Rng& rng, std::size_t n,
                               std::size_t k, std::size_t w, std::size_t d,
                               CorpusKind kind,
                               std::size_t guard = kDefaultExpansionGuard);

// Read-k sequence over 0..n-1 whose reads are each monotone: read 1 is
// increasing, later reads pick a direction at random, and the reads are
// merged at random subject to occurrence c of an element following
// occurrence c-1.
std::vector<std::size_t> random_per_read_monotone_sequence(Rng& rng,
                                                           std::size_t n,
                                                           std::size_t k);

// Read-once program in a random order, interior widths in [1, w].
Roabp random_roabp(const PrimeField& field, Rng& rng, std::size_t n,
                   std::size_t w, std::size_t d);

// Nonzero multilinear polynomial on n variables: the expansion of a random
// degree-1 ROABP (width <= 3) or a sparse random sum of monomials.
SparsePoly random_multilinear(const PrimeField& field, Rng& rng, std::size_t n);

}  // namespace readk

#endif  // READK_RANDOM_INSTANCES_HPP_

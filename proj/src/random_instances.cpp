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

#include "readk/random_instances.hpp"

#include <algorithm>
#include <numeric>

#include "readk/linalg.hpp"

namespace readk {

Elem random_elem(const PrimeField& field, Rng& rng) {
  return std::uniform_int_distribution<Elem>(0, field.prime() - 1)(rng);
}

UniPoly random_uni_poly(const PrimeField& field, Rng& rng, std::size_t d,
                        double zero_prob) {
  if (std::bernoulli_distribution(zero_prob)(rng)) return {};
  std::vector<Elem> c(d + 1);
  for (Elem& e : c) e = random_elem(field, rng);
  return UniPoly(std::move(c));
}

std::vector<std::size_t> random_permutation(Rng& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

std::vector<std::size_t> random_read_k_order(Rng& rng, std::size_t n,
                                             std::size_t k) {
  std::vector<std::size_t> seq;
  for (std::size_t v = 0; v < n; ++v) seq.insert(seq.end(), k, v);
  std::shuffle(seq.begin(), seq.end(), rng);
  return seq;
}

namespace {

std::vector<std::size_t> random_widths(Rng& rng, std::size_t layers,
                                       std::size_t w) {
  std::uniform_int_distribution<std::size_t> dist(1, std::max<std::size_t>(w, 1));
  std::vector<std::size_t> widths(layers + 1, 1);
  for (std::size_t j = 1; j < layers; ++j) widths[j] = dist(rng);
  return widths;
}

}  // namespace

ObliviousAbp random_abp_in_order(const PrimeField& field, Rng& rng,
                                 std::size_t n,
                                 std::span<const std::size_t> reads,
                                 std::size_t w, std::size_t d,
                                 double zero_prob) {
  const auto widths = random_widths(rng, reads.size(), w);
  std::vector<Layer> layers;
  for (std::size_t j = 0; j < reads.size(); ++j) {
    UniMatrix m(widths[j], widths[j + 1]);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        m(r, c) = random_uni_poly(field, rng, d, zero_prob);
      }
    }
    layers.push_back({reads[j], std::move(m), false});
  }
  if (layers.empty()) {
    UniMatrix m(1, 1);
    m(0, 0) = UniPoly::constant(random_elem(field, rng));
    layers.push_back({std::nullopt, std::move(m), false});
  }
  return ObliviousAbp(field, n, std::move(layers), std::max<std::size_t>(w, 1),
                      d);
}

ObliviousAbp random_read_k_abp(const PrimeField& field, Rng& rng, std::size_t n,
                               std::size_t k, std::size_t w, std::size_t d) {
  const auto reads = random_read_k_order(rng, n, k);
  return random_abp_in_order(field, rng, n, reads, w, d, 0.1);
}

ObliviousAbp random_k_pass_abp(const PrimeField& field, Rng& rng, std::size_t n,
                               std::size_t k, std::size_t w, std::size_t d,
                               bool same_order) {
  std::vector<std::size_t> reads;
  const auto pi = random_permutation(rng, n);
  for (std::size_t pass = 0; pass < k; ++pass) {
    const auto p = same_order ? pi : random_permutation(rng, n);
    reads.insert(reads.end(), p.begin(), p.end());
  }
  return random_abp_in_order(field, rng, n, reads, w, d);
}

ObliviousAbp gauge_transform(const ObliviousAbp& a, Rng& rng) {
  const PrimeField& F = a.field();
  std::vector<Layer> layers = a.layers();
  std::optional<FMatrix> prev_inv;
  for (std::size_t j = 0; j < layers.size(); ++j) {
    UniMatrix m = layers[j].matrix;
    if (prev_inv) m = mul_const_left(F, *prev_inv, m);
    if (j + 1 < layers.size()) {
      const auto dim = static_cast<Eigen::Index>(m.cols());
      for (;;) {
        FMatrix g(dim, dim);
        for (Eigen::Index r = 0; r < dim; ++r) {
          for (Eigen::Index c = 0; c < dim; ++c) g(r, c) = random_elem(F, rng);
        }
        auto inv = mat_inverse(F, g);
        if (!inv) continue;
        m = mul_const_right(F, m, g);
        prev_inv = std::move(inv);
        break;
      }
    }
    layers[j].matrix = std::move(m);
  }
  return ObliviousAbp(F, a.num_vars(), std::move(layers), a.width(),
                      a.degree());
}

ObliviousAbp planted_zero_abp(const PrimeField& field, Rng& rng, std::size_t n,
                              std::size_t k, std::size_t w, std::size_t d) {
  const std::size_t base_w = std::max<std::size_t>(1, w / 2);
  const auto reads = random_read_k_order(rng, n, k);
  const ObliviousAbp base =
      random_abp_in_order(field, rng, n, reads, base_w, d, 0.1);
  const std::vector<ObliviousAbp> parts{base, gauge_transform(base, rng)};
  const std::vector<Elem> weights{1, field.neg(1)};
  return abp_parallel_sum(parts, weights);
}

ObliviousAbp root_heavy_abp(const PrimeField& field, Rng& rng, std::size_t n,
                            std::size_t k, std::size_t w, std::size_t d) {
  const auto reads = random_read_k_order(rng, n, k);
  const auto widths = random_widths(rng, reads.size(), w);
  std::uniform_int_distribution<std::size_t> deg_dist(0, d);
  std::uniform_int_distribution<Elem> root_dist(0, static_cast<Elem>(d));
  std::vector<Layer> layers;
  for (std::size_t j = 0; j < reads.size(); ++j) {
    UniMatrix m(widths[j], widths[j + 1]);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (std::bernoulli_distribution(0.1)(rng)) continue;
        Elem lead = random_elem(field, rng);
        if (lead == 0) lead = 1;
        UniPoly p = UniPoly::constant(lead);
        const std::size_t deg = deg_dist(rng);
        for (std::size_t i = 0; i < deg; ++i) {
          p = uni_mul(field, p, UniPoly({field.neg(root_dist(rng)), 1}));
        }
        m(r, c) = std::move(p);
      }
    }
    layers.push_back({reads[j], std::move(m), false});
  }
  return ObliviousAbp(field, n, std::move(layers), w, d);
}

ObliviousAbp random_corpus_abp(const PrimeField& field, Rng& rng, std::size_t n,
                               std::size_t k, std::size_t w, std::size_t d,
                               CorpusKind kind, std::size_t guard) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    ObliviousAbp a;
    switch (kind) {
      case CorpusKind::kGeneric:
        a = random_read_k_abp(field, rng, n, k, w, d);
        break;
      case CorpusKind::kPlantedZero:
        a = planted_zero_abp(field, rng, n, k, w, d);
        break;
      case CorpusKind::kRootHeavy:
        a = root_heavy_abp(field, rng, n, k, w, d);
        break;
    }
    if (expansion_estimate(a) <= guard) return a;
  }
  throw GuardExceeded("no corpus instance within the expansion guard");
}

std::vector<std::size_t> random_per_read_monotone_sequence(Rng& rng,
                                                           std::size_t n,
                                                           std::size_t k) {
  std::vector<std::vector<std::size_t>> reads(k);
  for (std::size_t c = 0; c < k; ++c) {
    reads[c].resize(n);
    std::iota(reads[c].begin(), reads[c].end(), 0);
    if (c > 0 && std::bernoulli_distribution(0.5)(rng)) {
      std::reverse(reads[c].begin(), reads[c].end());
    }
  }
  std::vector<std::size_t> next(k, 0);
  // done[v] = number of occurrences of v already emitted.
  std::vector<std::size_t> done(n, 0);
  std::vector<std::size_t> seq;
  seq.reserve(n * k);
  while (seq.size() < n * k) {
    std::vector<std::size_t> ready;
    for (std::size_t c = 0; c < k; ++c) {
      if (next[c] < n && done[reads[c][next[c]]] == c) ready.push_back(c);
    }
    const std::size_t c =
        ready[std::uniform_int_distribution<std::size_t>(0, ready.size() - 1)(rng)];
    const std::size_t v = reads[c][next[c]++];
    ++done[v];
    seq.push_back(v);
  }
  return seq;
}

Roabp random_roabp(const PrimeField& field, Rng& rng, std::size_t n,
                   std::size_t w, std::size_t d) {
  Roabp out;
  out.order = random_permutation(rng, n);
  out.abp = random_abp_in_order(field, rng, n, out.order, w, d, 0.2);
  out.width_profile = realized_cut_widths(out.abp);
  return out;
}

namespace {

SparsePoly multilinear_draw(const PrimeField& field, Rng& rng, std::size_t n) {
  if (std::bernoulli_distribution(0.6)(rng)) {
    const auto order = random_permutation(rng, n);
    std::uniform_int_distribution<std::size_t> wd(1, 3);
    const ObliviousAbp a =
        random_abp_in_order(field, rng, n, order, wd(rng), 1, 0.2);
    return abp_expand(a);
  }
  std::uniform_int_distribution<std::size_t> count(1, 2 * n + 2);
  std::vector<SparsePoly::Term> terms;
  const std::size_t m = count(rng);
  for (std::size_t i = 0; i < m; ++i) {
    SparsePoly::Term t{std::vector<Exponent>(n), random_elem(field, rng)};
    for (auto& e : t.exponents) e = std::bernoulli_distribution(0.5)(rng);
    terms.push_back(std::move(t));
  }
  return SparsePoly::from_terms(field, n, std::move(terms));
}

}  // namespace

SparsePoly random_multilinear(const PrimeField& field, Rng& rng, std::size_t n) {
  for (;;) {
    SparsePoly f = multilinear_draw(field, rng, n);
    if (!f.is_zero()) return f;
  }
}

}  // namespace readk

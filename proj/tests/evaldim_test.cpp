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

#include <gtest/gtest.h>

#include <numeric>

#include "helpers.hpp"
#include "oracles.hpp"
#include "readk/evaldim.hpp"
#include "readk/hardpoly.hpp"
#include "readk/random_instances.hpp"

namespace {

using namespace readk;
using namespace testing_helpers;

const PrimeField F(101);

using Vars = std::vector<std::size_t>;

std::size_t dim(const SparsePoly& f, const Vars& s, const Vars& t,
                const Vars& r = {}) {
  return eval_dim(f, s, t, r).dimension;
}

std::size_t oracle_dim(const SparsePoly& f, const Vars& s) {
  return oracle::pd_rank(oracle::from_sparse(f),
                         std::set<std::size_t>(s.begin(), s.end()), 101);
}

TEST(EvalDim, WorkedExamples) {
  const auto x = var(F, 2, 0), y = var(F, 2, 1);
  EXPECT_EQ(dim(x * y, {0}, {1}), 1u);
  EXPECT_EQ(dim(x + y, {0}, {1}), 2u);
  EXPECT_EQ(partial_derivative_rank(x + y, Vars{0}, Vars{1}), 2u);
  // (v1 + u1)(v2 + u2) with u = {0, 1}, v = {2, 3}.
  auto v = [](std::size_t i) { return var(F, 4, i); };
  EXPECT_EQ(dim((v(2) + v(0)) * (v(3) + v(1)), {0, 1}, {2, 3}), 4u);
  EXPECT_EQ(dim(x * y, {}, {0, 1}), 1u);
  EXPECT_EQ(dim(SparsePoly(F, 2), {0}, {1}), 0u);
}

TEST(EvalDim, RejectsOverlappingOrIncompleteSets) {
  const auto x = var(F, 3, 0);
  EXPECT_THROW(eval_dim(x, Vars{0}, Vars{0, 1, 2}, Vars{}), EvalDimError);
  EXPECT_THROW(eval_dim(x, Vars{0}, Vars{1}, Vars{}), EvalDimError);
}

TEST(EvalDim, BasisAssignmentsSpan) {
  Rng rng(4);
  for (int i = 0; i < 40; ++i) {
    const std::size_t n = 2 + rng() % 3;
    const auto f = random_multilinear(F, rng, n);
    const std::size_t s = 1 + rng() % (n - 1);
    Vars sv(s), tv(n - s);
    std::iota(sv.begin(), sv.end(), 0);
    std::iota(tv.begin(), tv.end(), s);
    const EvalDimReport rep = eval_dim(f, sv, tv, Vars{});
    EXPECT_EQ(rep.dimension, oracle_dim(f, sv));
    ASSERT_EQ(rep.basis_assignments.size(), rep.dimension);
    // Restrictions at the reported points are independent.
    std::vector<oracle::NPoly> rows;
    std::set<oracle::Mono> monos;
    for (const auto& a : rep.basis_assignments) {
      Assignment as;
      for (std::size_t j = 0; j < s; ++j) as[sv[j]] = a[j];
      rows.push_back(oracle::from_sparse(poly_substitute(f, as)));
      for (const auto& [m, c] : rows.back()) monos.insert(m);
    }
    std::vector<std::vector<oracle::u64>> mat;
    for (const auto& r : rows) {
      std::vector<oracle::u64> row;
      for (const auto& m : monos) row.push_back(r.count(m) ? r.at(m) : 0);
      mat.push_back(row);
    }
    EXPECT_EQ(oracle::rank(mat, 101), rep.dimension);
  }
}

TEST(EvalDim, LargeDimensionFromDisjointSums) {
  for (std::size_t t = 1; t <= 3; ++t) {
    const std::size_t n = 3 * t;  // u = [0,t), v = [t,2t), w = [2t,3t)
    SparsePoly f = cst(F, n, 1);
    for (std::size_t i = 0; i < t; ++i) {
      f = f * (var(F, n, t + i) + var(F, n, i));
      f = f * (var(F, n, i) + var(F, n, 2 * t + i) + cst(F, n, 1));
    }
    Vars u(t), rest(2 * t);
    std::iota(u.begin(), u.end(), 0);
    std::iota(rest.begin(), rest.end(), t);
    const std::size_t d = dim(f, u, rest);
    EXPECT_GE(d, std::size_t{1} << t);
    EXPECT_EQ(d, oracle_dim(f, u));
  }
}

TEST(EvalDim, SubstitutingNeverRaisesRank) {
  Rng rng(6);
  for (int i = 0; i < 60; ++i) {
    const auto a = random_read_k_abp(F, rng, 4, 2, 2, 1);
    const auto f = abp_expand(a);
    const std::size_t full = dim(f, {0, 1}, {2, 3});
    EXPECT_EQ(full, oracle_dim(f, {0, 1}));
    EXPECT_LE(dim(f, {0, 1}, {2}, {3}), full);
    EXPECT_LE(dim(f, {0}, {2, 3}, {1}), full);
  }
}

TEST(WidthProfile, WorkedExamples) {
  const auto x = var(F, 2, 0), y = var(F, 2, 1);
  EXPECT_EQ(roabp_width_profile(x * y, Vars{0, 1}), Vars{1});
  EXPECT_EQ(roabp_width_profile(x + y, Vars{0, 1}), Vars{2});
  const auto p2 = *gen_pn(F, 2).polynomial;
  const Vars order{0, 1, 2, 3};
  const Vars prof = roabp_width_profile(p2, order);
  ASSERT_EQ(prof.size(), 3u);
  for (std::size_t i = 1; i < 4; ++i) {
    EXPECT_EQ(prof[i - 1], oracle_dim(p2, Vars(order.begin(), order.begin() + i)));
    EXPECT_GE(prof[i - 1], 1u);
  }
  EXPECT_EQ(prof, (Vars{3, 4, 3}));
}

TEST(Synthesize, WorkedExamples) {
  const auto x = var(F, 2, 0), y = var(F, 2, 1);
  const Roabp a = roabp_synthesize(x * y, Vars{0, 1});
  EXPECT_EQ(a.abp.realized_width(), 1u);
  EXPECT_EQ(abp_expand(a.abp), x * y);
  const Roabp z = roabp_synthesize(SparsePoly(F, 2), Vars{1, 0});
  EXPECT_TRUE(abp_expand(z.abp).is_zero());
  const Roabp s = roabp_synthesize(x + y, Vars{0, 1});
  EXPECT_EQ(s.abp.realized_width(), 2u);
  EXPECT_EQ(abp_expand(s.abp), x + y);
}

TEST(SynthesizeProperty, CutWidthsAreTheEvaluationDimensions) {
  Rng rng(8);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = 1 + rng() % 5;
    // Individual degree up to 2 via a random read-2 program.
    const auto f = (i % 2) ? random_multilinear(F, rng, n)
                           : abp_expand(random_read_k_abp(F, rng, n, 2, 2, 1));
    const Vars order = random_permutation(rng, n);
    const Roabp r = roabp_synthesize(f, order);
    if (f.is_zero()) {
      // No width-0 program exists; the zero polynomial gets width 1.
      EXPECT_TRUE(abp_expand(r.abp).is_zero());
      EXPECT_EQ(r.abp.realized_width(), 1u);
      continue;
    }
    EXPECT_EQ(abp_expand(r.abp), f);
    EXPECT_EQ(realized_cut_widths(r.abp), roabp_width_profile(f, order));
    EXPECT_EQ(r.abp.read_order(), order);
    for (std::size_t c = 1; c < n; ++c) {
      EXPECT_EQ(r.width_profile[c - 1],
                oracle_dim(f, Vars(order.begin(), order.begin() + c)));
    }
  }
}

TEST(KPass, WorkedExamples) {
  Rng rng(9);
  const auto one = random_abp_in_order(F, rng, 3, Vars{0, 1, 2}, 3, 2);
  const Roabp r1 = k_pass_to_roabp(one);
  EXPECT_EQ(abp_expand(r1.abp), abp_expand(one));
  EXPECT_LE(r1.abp.realized_width(), 9u);
  const auto sq = monomial_abp(F, 1, {0, 0});
  const Roabp r2 = k_pass_to_roabp(sq);
  EXPECT_EQ(r2.abp.realized_width(), 1u);
  EXPECT_EQ(abp_expand(r2.abp), var(F, 1, 0) * var(F, 1, 0));
  // (x1 + x2)^2 read twice in order (x1, x2), width 2.
  const auto l1 = layer(F, 0, {{{0, 1}, {1}}});
  const auto l2 = layer(F, 1, {{{1}, {}}, {{0, 1}, {}}});
  const auto l2b = layer(F, 1, {{{1}}, {{0, 1}}});
  const auto l1b = layer(F, 0, {{{0, 1}, {1}}, {{}, {}}});
  const auto sum2 = abp(F, 2, {l1, l2, l1b, l2b});
  const auto xs = var(F, 2, 0) + var(F, 2, 1);
  ASSERT_EQ(abp_expand(sum2), xs * xs);
  const Roabp r3 = k_pass_to_roabp(sum2);
  EXPECT_EQ(abp_expand(r3.abp), xs * xs);
  EXPECT_LE(r3.abp.realized_width(), 16u);
  EXPECT_THROW(k_pass_to_roabp(monomial_abp(F, 2, {0, 1, 1, 0})), std::exception);
}

TEST(KPassProperty, WidthWithinBound) {
  Rng rng(10);
  for (int i = 0; i < 60; ++i) {
    const std::size_t k = 1 + rng() % 3, w = 1 + rng() % 3;
    const std::size_t n = 1 + rng() % (k == 3 ? 3 : 4);
    const auto a = random_k_pass_abp(F, rng, n, k, w, 1, true);
    const Roabp r = k_pass_to_roabp(a);
    std::size_t bound = 1;
    for (std::size_t j = 0; j < 2 * k; ++j) bound *= w;
    EXPECT_LE(r.abp.realized_width(), bound);
    EXPECT_EQ(oracle::from_sparse(abp_expand(r.abp)), oracle::expand(a));
  }
}

TEST(KGap, WorkedExamples) {
  const auto fig = monomial_abp(F, 4, {0, 1, 2, 3, 0, 1, 0, 1, 2, 3, 2, 3});
  EXPECT_EQ(k_gap_check(fig, std::set<std::size_t>{0, 1}), 2u);
  EXPECT_EQ(k_gap_check(fig, std::set<std::size_t>{0, 1, 2, 3}), 1u);
  EXPECT_EQ(k_gap_check(monomial_abp(F, 2, {0, 1, 0, 1}), std::set<std::size_t>{0}),
            2u);
  const GapProfile gp = k_gap_profile(fig, Vars{0, 1, 2, 3});
  EXPECT_EQ(gp.gaps, (Vars{0, 3, 2, 3, 1}));
  EXPECT_EQ(gp.max_gap, 3u);
  EXPECT_EQ(gp.worst_prefix, 1u);
  const Roabp r = k_gap_to_roabp(fig, Vars{0, 1, 2, 3}, 3);
  EXPECT_EQ(r.abp.realized_width(), 1u);
  EXPECT_EQ(abp_expand(r.abp), abp_expand(fig));
  EXPECT_THROW(k_gap_to_roabp(fig, Vars{0, 1, 2, 3}, 2), std::exception);
}

TEST(KGap, ChecksMatchRunCounting) {
  Rng rng(12);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + rng() % 5, k = 1 + rng() % 3;
    const auto a = random_read_k_abp(F, rng, n, k, 2, 1);
    const auto reads = a.read_order();
    std::vector<std::size_t> nonconst;
    for (const auto& l : a.layers()) {
      if (l.var && !l.matrix.is_constant()) nonconst.push_back(*l.var);
    }
    const Vars order = random_permutation(rng, n);
    for (std::size_t p = 0; p <= n; ++p) {
      const std::set<std::size_t> pre(order.begin(), order.begin() + p);
      EXPECT_EQ(k_gap_check(a, pre), oracle::runs(nonconst, pre));
    }
  }
}

TEST(KGap, RegularReadTwoProgramCollapses) {
  Rng rng(13);
  // Blocks {x1, x2} and {x3, x4}, each read twice in place.
  const Vars reads{0, 1, 0, 1, 2, 3, 2, 3};
  for (int i = 0; i < 20; ++i) {
    const auto a = random_abp_in_order(F, rng, 4, reads, 2, 1);
    const Roabp r = k_gap_to_roabp(a, Vars{0, 1, 2, 3}, 2);
    EXPECT_LE(r.abp.realized_width(), 16u);
    EXPECT_EQ(abp_expand(r.abp), abp_expand(a));
  }
}

}  // namespace

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

#include <algorithm>
#include <cmath>
#include <numeric>

#include "oracles.hpp"
#include "readk/random_instances.hpp"
#include "readk/sequences.hpp"

namespace {

using namespace readk;
using Seq = std::vector<std::size_t>;

ReadSequence seq(const Seq& s) { return ReadSequence::from_elements(s); }

std::set<std::size_t> as_set(const Seq& v) { return {v.begin(), v.end()}; }

// Sequence restricted to a subset, as raw elements.
Seq restricted(const Seq& s, const std::set<std::size_t>& keep) {
  Seq out;
  for (std::size_t e : s) {
    if (keep.count(e)) out.push_back(e);
  }
  return out;
}

TEST(ReadSequence, RelabelsByFirstOccurrence) {
  const auto s = seq({7, 3, 3, 7});
  EXPECT_EQ(s.k(), 2u);
  EXPECT_EQ(s.first_order(), (Seq{7, 3}));
  EXPECT_EQ(s.rank(3), 1u);
  EXPECT_EQ(s.occur(2, 7), 3u);
  EXPECT_THROW(seq({0, 1, 0}), SequenceError);
}

TEST(SeqProject, Examples) {
  const auto s = seq({0, 1, 1, 0});
  EXPECT_EQ(seq_project(s, {2}).elements_in_order(), (Seq{1, 0}));
  EXPECT_EQ(seq_project(s, {1, 2}), s);
  const Seq r3{0, 1, 0, 2, 1, 2, 2, 0, 1};
  EXPECT_EQ(seq_project(seq(r3), {1, 3}).elements_in_order(),
            (Seq{0, 1, 2, 2, 0, 1}));
}

TEST(SeqRestrict, ExhaustiveSubsetsKeepExactness) {
  const Seq s{0, 1, 2, 3, 4, 5, 5, 3, 1, 4, 0, 2};
  EXPECT_EQ(seq_restrict(seq({0, 1, 0, 1}), {0}).elements_in_order(), (Seq{0, 0}));
  EXPECT_EQ(seq_restrict(seq(s), as_set({0, 1, 2, 3, 4, 5})), seq(s));
  for (unsigned mask = 1; mask < 64; ++mask) {
    std::set<std::size_t> keep;
    for (std::size_t e = 0; e < 6; ++e) {
      if (mask >> e & 1) keep.insert(e);
    }
    const auto r = seq_restrict(seq(s), keep);
    EXPECT_EQ(r.k(), 2u);
    EXPECT_EQ(r.elements_in_order(), restricted(s, keep));
  }
}

TEST(LongestMonotone, Examples) {
  const std::vector<std::int64_t> v{2, 4, 1, 5, 3};
  const MonotoneRun r = longest_monotone(v);
  EXPECT_TRUE(r.increasing);
  EXPECT_EQ(r.indices, (Seq{0, 1, 3}));
  const std::vector<std::int64_t> id{1, 2, 3, 4, 5, 6};
  EXPECT_EQ(longest_monotone(id).indices.size(), 6u);
}

TEST(LongestMonotone, ExhaustiveAgainstQuadraticDp) {
  for (std::size_t m = 1; m <= 8; ++m) {
    std::vector<std::int64_t> p(m);
    std::iota(p.begin(), p.end(), 0);
    const auto floor = static_cast<std::size_t>(std::ceil(std::sqrt(double(m))));
    do {
      const MonotoneRun r = longest_monotone(p);
      ASSERT_EQ(r.indices.size(), oracle::longest_monotone_len(p));
      ASSERT_GE(r.indices.size(), floor);
      for (std::size_t i = 1; i < r.indices.size(); ++i) {
        ASSERT_LT(r.indices[i - 1], r.indices[i]);
        ASSERT_EQ(p[r.indices[i - 1]] < p[r.indices[i]], r.increasing);
      }
    } while (std::next_permutation(p.begin(), p.end()));
  }
}

TEST(PerReadMonotone, Examples) {
  const Seq mono{0, 1, 2, 3, 3, 2, 1, 0};
  EXPECT_EQ(per_read_monotone_subset(seq(mono)), (Seq{0, 1, 2, 3}));
  const Seq s{0, 1, 2, 3, 1, 3, 0, 2};
  const Seq x = per_read_monotone_subset(seq(s));
  EXPECT_GE(x.size(), 2u);
  EXPECT_TRUE(oracle::per_read_monotone(restricted(s, as_set(x))));
  // Brute force: no per-read-monotone subset beats the one returned by more
  // than the longest-monotone optimum allows.
  std::size_t best = 0;
  for (unsigned mask = 1; mask < 16; ++mask) {
    std::set<std::size_t> keep;
    for (std::size_t e = 0; e < 4; ++e) {
      if (mask >> e & 1) keep.insert(e);
    }
    if (oracle::per_read_monotone(restricted(s, keep))) best = std::max(best, keep.size());
  }
  EXPECT_EQ(x.size(), best);
}

TEST(PerReadMonotoneProperty, CheckerAndBound) {
  Rng rng(21);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t k = 2 + i % 2, n = 1 + rng() % 20;
    const Seq s = random_read_k_order(rng, n, k);
    const Seq x = per_read_monotone_subset(seq(s));
    const Seq r = restricted(s, as_set(x));
    ASSERT_TRUE(oracle::per_read_monotone(r));
    EXPECT_TRUE(is_per_read_monotone(seq(r)));
    const double bound = std::pow(double(n), 1.0 / double(1u << (k - 1)));
    EXPECT_GE(double(x.size()) + 1e-9, std::floor(bound));
    EXPECT_GE(x.size(), static_cast<std::size_t>(std::ceil(bound - 1e-9)));
  }
}

TEST(RegularlyInterleaving, Examples) {
  EXPECT_TRUE(is_regularly_interleaving(seq({0, 1, 0, 1})).regular);
  EXPECT_FALSE(is_regularly_interleaving(seq({0, 1, 1, 2, 0, 2})).regular);
  const auto w = is_regularly_interleaving(seq({0, 1, 0, 1, 2, 2}));
  ASSERT_TRUE(w.regular);
  EXPECT_EQ(w.pairs[0].blocks, (std::vector<Seq>{{0, 1}, {2}}));
  // Blocks of firsts followed by their seconds.
  EXPECT_TRUE(is_regularly_interleaving(seq({0, 1, 1, 0, 2, 3, 4, 4, 2, 3})).regular);
  const Seq dec{0, 1, 2, 3, 3, 2, 1, 0};
  EXPECT_EQ(regularly_interleaving_subset(seq(dec)).size(), 4u);
}

TEST(RegularlyInterleaving, AgreesWithExhaustiveSearch) {
  Rng rng(22);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t k = 2 + i % 2, n = 1 + rng() % 5;
    const Seq s = random_read_k_order(rng, n, k);
    ASSERT_EQ(is_regularly_interleaving(seq(s)).regular,
              oracle::regularly_interleaving(s));
  }
}

TEST(RegularSubsetProperty, ReadTwoThirdBound) {
  Rng rng(23);
  for (int i = 0; i < 500; ++i) {
    const std::size_t s_len = 1 + rng() % 12;
    const Seq s = random_per_read_monotone_sequence(rng, s_len, 2);
    ASSERT_TRUE(oracle::per_read_monotone(s));
    const Seq x = regularly_interleaving_subset(seq(s));
    EXPECT_TRUE(oracle::regularly_interleaving(restricted(s, as_set(x))));
    EXPECT_GE(3 * x.size(), s_len);
  }
}

TEST(RegularSubsetProperty, SizeNineExample) {
  Rng rng(24);
  for (int i = 0; i < 50; ++i) {
    const Seq s = random_per_read_monotone_sequence(rng, 9, 2);
    const Seq x = regularly_interleaving_subset(seq(s));
    EXPECT_GE(x.size(), 3u);
    EXPECT_TRUE(oracle::regularly_interleaving(restricted(s, as_set(x))));
  }
}

TEST(RegularSubsetProperty, ReadThreeStillRegular) {
  Rng rng(25);
  for (int i = 0; i < 300; ++i) {
    const Seq s = random_per_read_monotone_sequence(rng, 1 + rng() % 10, 3);
    const Seq x = regularly_interleaving_subset(seq(s));
    EXPECT_FALSE(x.empty());
    EXPECT_TRUE(oracle::regularly_interleaving(restricted(s, as_set(x))));
    EXPECT_TRUE(oracle::per_read_monotone(restricted(s, as_set(x))));
  }
}

TEST(DownwardClosure, ExhaustiveSmallAndRandomLarger) {
  Rng rng(26);
  int checked = 0;
  for (int i = 0; i < 400 && checked < 150; ++i) {
    const std::size_t k = 2 + i % 2;
    const std::size_t n = (i % 3 == 0) ? 7 + rng() % 6 : 1 + rng() % 6;
    const Seq s0 = random_per_read_monotone_sequence(rng, n, k);
    const Seq x = regularly_interleaving_subset(seq(s0));
    const Seq s = restricted(s0, as_set(x));
    if (!oracle::regularly_interleaving(s)) continue;
    ++checked;
    const std::size_t m = x.size();
    const bool exhaustive = m <= 6;
    const unsigned total = exhaustive ? (1u << m) : 64;
    for (unsigned t = 0; t < total; ++t) {
      const unsigned mask = exhaustive ? t : static_cast<unsigned>(rng());
      std::set<std::size_t> keep;
      for (std::size_t e = 0; e < m; ++e) {
        if (mask >> e & 1) keep.insert(x[e]);
      }
      const Seq r = restricted(s, keep);
      EXPECT_TRUE(oracle::per_read_monotone(r));
      EXPECT_TRUE(oracle::regularly_interleaving(r));
    }
  }
  EXPECT_GE(checked, 100);
}

TEST(ConcatDecompose, Examples) {
  const auto one = concat_decompose(seq({0, 1, 2, 0, 1, 2}));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].end, 6u);
  const auto two = concat_decompose(seq({0, 1, 2, 2, 1, 0}));
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0].begin, 0u);
  EXPECT_EQ(two[0].end, 3u);
  EXPECT_FALSE(two[1].increasing);
  const auto three = concat_decompose(seq({0, 1, 1, 0, 0, 1}));
  EXPECT_EQ(three.size(), 3u);
  EXPECT_THROW(concat_decompose(seq({0, 1, 2, 1, 0, 2})), SequenceError);
}

TEST(InterfaceCount, RegularIncreasingHasSmallGaps) {
  Rng rng(27);
  EXPECT_EQ(interface_count(Seq{0, 1, 0, 1}, {0}), 2u);
  int checked = 0;
  for (int i = 0; i < 2000 && checked < 200; ++i) {
    const std::size_t k = 2 + i % 2;
    const Seq s0 = random_per_read_monotone_sequence(rng, 2 + rng() % 8, k);
    const Seq x = regularly_interleaving_subset(seq(s0));
    const Seq s = restricted(s0, as_set(x));
    const auto rs = seq(s);
    bool increasing = true;
    for (std::size_t r = 1; r <= rs.k(); ++r) {
      increasing = increasing && read_direction(rs, r) != Direction::kDecreasing;
    }
    if (!increasing) continue;
    ++checked;
    const Seq order = rs.first_order();
    for (std::size_t p = 0; p <= order.size(); ++p) {
      const std::set<std::size_t> pre(order.begin(), order.begin() + p);
      EXPECT_EQ(interface_count(s, pre), oracle::runs(s, pre));
      EXPECT_LE(interface_count(s, pre), rs.k());
    }
  }
  EXPECT_GT(checked, 50);
}

}  // namespace

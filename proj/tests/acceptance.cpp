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

// Acceptance run. With no arguments every criterion runs; otherwise only the
// listed ones. Prints one PASS/FAIL line per criterion and exits nonzero if
// any listed criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "readk/abp.hpp"
#include "readk/evaldim.hpp"
#include "readk/hardpoly.hpp"
#include "readk/pit.hpp"
#include "readk/random_instances.hpp"
#include "readk/sequences.hpp"

namespace {

using namespace readk;
using Vars = std::vector<std::size_t>;
using Clock = std::chrono::steady_clock;

const PrimeField F(101);

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Largest n <= 8 whose dense expansion fits the default guard.
std::size_t corpus_n_max(std::size_t k, std::size_t d) {
  std::size_t n = 8;
  while (std::pow(double(k * d + 1), double(n)) > double(kDefaultExpansionGuard)) --n;
  return n;
}

struct CorpusEntry {
  ObliviousAbp abp;
  std::size_t k;
};

// 200 programs per k in {1, 2, 3}, cycling through generic, planted-zero and
// root-heavy instances.
std::vector<CorpusEntry> pit_corpus() {
  Rng rng(20260101);
  std::vector<CorpusEntry> out;
  for (std::size_t k = 1; k <= 3; ++k) {
    for (std::size_t i = 0; i < 200; ++i) {
      const std::size_t w = 1 + rng() % 3, d = 1 + rng() % 2;
      const std::size_t n = 1 + rng() % corpus_n_max(k, d);
      const auto kind = static_cast<CorpusKind>(i % 3);
      out.push_back({random_corpus_abp(F, rng, n, k, w, d, kind), k});
    }
  }
  return out;
}

struct PitRun {
  std::size_t agree = 0, total = 0, nonzero = 0, zero = 0, bad_witness = 0;
  std::size_t over_bound = 0;
  double max_ratio = 0;
  double seconds = 0;
};

const PitRun& pit_run() {
  static const PitRun run = [] {
    PitRun r;
    const auto t0 = Clock::now();
    for (const auto& e : pit_corpus()) {
      const bool truth = !abp_expand(e.abp).is_zero();
      const PitVerdict v = read_k_pit(e.abp);
      ++r.total;
      r.agree += (!v.is_zero) == truth;
      (truth ? r.nonzero : r.zero) += 1;
      if (!v.is_zero && abp_evaluate(e.abp, *v.witness) == 0) ++r.bad_witness;
      const double bound = iteration_bound(v.active_vars, v.read_multiplicity);
      const double its = double(v.iterations.size());
      if (its > bound) ++r.over_bound;
      if (bound > 0) r.max_ratio = std::max(r.max_ratio, its / bound);
    }
    r.seconds = seconds_since(t0);
    return r;
  }();
  return run;
}

Outcome criterion1() {
  const PitRun& r = pit_run();
  const bool pass = r.agree == r.total && r.bad_witness == 0 && r.seconds < 600;
  return {pass, fmt("%zu/%zu verdicts agree (%zu nonzero, %zu zero), %zu bad "
                    "witnesses, %.1fs",
                    r.agree, r.total, r.nonzero, r.zero, r.bad_witness, r.seconds)};
}

Outcome criterion2() {
  Rng rng(2002);
  std::size_t ok = 0, max_width = 0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + rng() % 6, w = 1 + rng() % 3, d = 1 + rng() % 2;
    const auto a = random_k_pass_abp(F, rng, n, 2, w, d, true);
    const Roabp r = k_pass_to_roabp(a);
    const bool same = abp_expand(r.abp) == abp_expand(a);
    const std::size_t rw = r.abp.realized_width();
    max_width = std::max(max_width, rw);
    ok += same && rw <= w * w * w * w && r.abp.read_order().size() == n;
  }
  return {ok == 100, fmt("%zu/100 collapsed programs identical and within w^4 "
                         "(largest realized width %zu)",
                         ok, max_width)};
}

Outcome criterion3() {
  Rng rng(2003);
  std::size_t ok = 0;
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 1 + rng() % 5;
    const SparsePoly f = random_multilinear(F, rng, n);
    const Vars order = random_permutation(rng, n);
    const Roabp r = roabp_synthesize(f, order);
    Vars oracle_profile;
    for (std::size_t c = 1; c < n; ++c) {
      oracle_profile.push_back(oracle::pd_rank(
          oracle::from_sparse(f), std::set<std::size_t>(order.begin(), order.begin() + c),
          101));
    }
    ok += realized_cut_widths(r.abp) == roabp_width_profile(f, order) &&
          roabp_width_profile(f, order) == oracle_profile &&
          abp_expand(r.abp) == f;
  }
  return {ok == 50, fmt("%zu/50 synthesized programs have exact cut widths", ok)};
}

Outcome criterion4() {
  std::size_t perms = 0, violations = 0, min_at_5 = 99;
  for (std::size_t m = 1; m <= 8; ++m) {
    std::vector<std::int64_t> p(m);
    std::iota(p.begin(), p.end(), 0);
    const auto floor = static_cast<std::size_t>(std::ceil(std::sqrt(double(m))));
    do {
      ++perms;
      const std::size_t len = longest_monotone(p).indices.size();
      if (len < floor || len != oracle::longest_monotone_len(p)) ++violations;
      if (m == 5) min_at_5 = std::min(min_at_5, len);
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return {violations == 0 && min_at_5 >= 3,
          fmt("%zu permutations, %zu violations, shortest at m=5 is %zu", perms,
              violations, min_at_5)};
}

std::vector<std::size_t> restricted(const std::vector<std::size_t>& s,
                                    const Vars& keep_v) {
  const std::set<std::size_t> keep(keep_v.begin(), keep_v.end());
  std::vector<std::size_t> out;
  for (std::size_t e : s) {
    if (keep.count(e)) out.push_back(e);
  }
  return out;
}

Outcome criterion5() {
  Rng rng(2005);
  std::size_t violations = 0, runs = 0;
  for (std::size_t k = 2; k <= 3; ++k) {
    const std::size_t count = k == 2 ? 500 : 200, n_max = k == 2 ? 12 : 16;
    for (std::size_t i = 0; i < count; ++i) {
      ++runs;
      const std::size_t n = 1 + rng() % n_max;
      const auto s = random_read_k_order(rng, n, k);
      const auto rs = ReadSequence::from_elements(s);
      const Vars x = per_read_monotone_subset(rs);
      const auto sx = restricted(s, x);
      const double bound = std::pow(double(n), 1.0 / double(1u << (k - 1)));
      if (!oracle::per_read_monotone(sx) || double(x.size()) + 1e-9 < bound) {
        ++violations;
        continue;
      }
      const Vars y = regularly_interleaving_subset(ReadSequence::from_elements(sx));
      const auto sy = restricted(s, y);
      const bool regular = is_regularly_interleaving(ReadSequence::from_elements(sy)).regular &&
                           oracle::regularly_interleaving(sy);
      if (!regular || (k == 2 && 3 * y.size() < x.size())) ++violations;
    }
  }
  return {violations == 0, fmt("%zu sequences, %zu violations", runs, violations)};
}

Outcome criterion6() {
  Rng rng(2006);
  std::size_t fixtures = 0, prefixes = 0, violations = 0, with_decreasing = 0;
  for (int i = 0; i < 600; ++i) {
    const std::size_t k = 2 + i % 2, n = 2 + rng() % 8;
    const auto s0 = random_per_read_monotone_sequence(rng, n, k);
    const auto s = restricted(s0, regularly_interleaving_subset(
                                      ReadSequence::from_elements(s0)));
    if (!oracle::per_read_monotone(s) || !oracle::regularly_interleaving(s)) {
      ++violations;
      continue;
    }
    const auto rs = ReadSequence::from_elements(s);
    bool dec = false;
    for (std::size_t r = 1; r <= rs.k(); ++r) {
      dec = dec || read_direction(rs, r) == Direction::kDecreasing;
    }
    with_decreasing += dec;
    // Relabel to 0..m-1 so the program has no unread variables.
    std::map<std::size_t, std::size_t> label;
    for (std::size_t e : rs.first_order()) label.emplace(e, label.size());
    Vars reads;
    for (std::size_t e : s) reads.push_back(label[e]);
    const std::size_t m = label.size();
    const auto a = random_abp_in_order(F, rng, m, reads, 1 + rng() % 2, 1, 0.0);
    ++fixtures;
    Vars order(m);
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t p = 0; p <= m; ++p) {
      ++prefixes;
      if (k_gap_check(a, p) > rs.k()) ++violations;
    }
  }
  return {violations == 0,
          fmt("%zu fixtures (%zu with a decreasing read), %zu prefixes, %zu "
              "violations",
              fixtures, with_decreasing, prefixes, violations)};
}

Outcome criterion7() {
  std::size_t rows = 0, violations = 0;
  std::string worst;
  for (std::size_t n = 2; n <= 3; ++n) {
    Vars sizes;
    for (std::size_t t = 0; t <= std::min<std::size_t>(4, n * n); ++t) sizes.push_back(t);
    for (const auto& r : experiment_pn_evaldim(F, n, sizes)) {
      ++rows;
      if (!r.pass) {
        if (violations == 0) {
          worst = fmt("first: n=%zu %s dimension %zu < %zu", n, r.subset.c_str(),
                      r.dimension, r.floor);
        }
        ++violations;
      }
    }
  }
  return {violations == 0, fmt("%zu subsets, %zu below 2^ceil(sqrt t)%s%s", rows,
                               violations, worst.empty() ? "" : "; ", worst.c_str())};
}

Outcome criterion8() {
  std::size_t rows = 0, violations = 0, max_m = 0;
  for (std::size_t n = 3; n <= 4; ++n) {
    for (const auto& r : experiment_qn_evaldim(F, n, 50, 2008 + n)) {
      ++rows;
      violations += !r.pass;
      max_m = std::max(max_m, r.size);
    }
  }
  return {violations == 0, fmt("%zu samples, largest m %zu, %zu violations", rows,
                               max_m, violations)};
}

Outcome criterion9() {
  Rng rng(2009);
  std::size_t ok = 0;
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 2 + rng() % 5, w = 1 + rng() % 3;
    const std::size_t t = 1 + rng() % std::min<std::size_t>(2, n - 1);
    const std::vector<Roabp> parts{random_roabp(F, rng, n, w, 1),
                                   random_roabp(F, rng, n, w, 1)};
    const Elimination e = eliminate_summand(parts, t);
    const EliminationCheck c = check_elimination(parts, t, e);
    // Independent check that part 0 is annihilated.
    oracle::NPoly combo;
    const auto f0 = oracle::expand(parts[0].abp);
    for (std::size_t a = 0; a < e.assignments.size(); ++a) {
      for (const auto& [mono, coef] : f0) {
        oracle::u64 v = coef * e.alpha[a] % 101;
        oracle::Mono m2 = mono;
        for (std::size_t q = 0; q < t; ++q) {
          v = v * oracle::pw(e.assignments[a][q], mono[e.s[q]], 101) % 101;
          m2[e.s[q]] = 0;
        }
        oracle::accumulate(combo, m2, v, 101);
      }
    }
    ok += c.ok() && combo.empty() && c.max_residual_width <= w * (w + 1);
  }
  return {ok == 50, fmt("%zu/50 eliminations annihilate part 1 within w(w+1)", ok)};
}

Outcome criterion10() {
  std::size_t cells = 0, fails = 0;
  for (int pi = 1; pi <= 9; ++pi) {
    for (std::uint64_t r = 1; r <= 9; ++r) {
      for (std::uint64_t n = 1; n <= 10000; ++n) {
        ++cells;
        fails += !iteration_bound_check(n, pi / 10.0, r);
      }
    }
  }
  const PitRun& run = pit_run();
  return {fails == 0 && run.over_bound == 0,
          fmt("%zu grid points, %zu failures; %zu corpus runs over the iteration "
              "bound (largest ratio %.3f)",
              cells, fails, run.over_bound, run.max_ratio)};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<Outcome()>> criteria{
      criterion1, criterion2, criterion3, criterion4, criterion5,
      criterion6, criterion7, criterion8, criterion9, criterion10};
  std::vector<std::size_t> which;
  for (int i = 1; i < argc; ++i) {
    const int c = std::atoi(argv[i]);
    if (c < 1 || c > static_cast<int>(criteria.size())) {
      std::fprintf(stderr, "unknown criterion '%s'\n", argv[i]);
      return 2;
    }
    which.push_back(static_cast<std::size_t>(c));
  }
  if (which.empty()) {
    which.resize(criteria.size());
    std::iota(which.begin(), which.end(), 1);
  }
  bool all = true;
  for (std::size_t c : which) {
    Outcome o;
    try {
      o = criteria[c - 1]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("criterion %zu: %s - %s\n", c, o.pass ? "PASS" : "FAIL",
                o.detail.c_str());
    std::fflush(stdout);
    all = all && o.pass;
  }
  return all ? 0 : 1;
}

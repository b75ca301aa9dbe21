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

#include "readk/pit.hpp"

#include <algorithm>
#include <cfenv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "readk/grid.hpp"
#include "readk/sequences.hpp"

namespace readk {

const char* generator_name(GeneratorKind kind) {
  switch (kind) {
    case GeneratorKind::kGrid:
      return "grid";
    case GeneratorKind::kRandom:
      return "random";
    case GeneratorKind::kExternal:
      return "external";
  }
  return "?";
}

HittingSet grid_hitting_set(std::span<const std::size_t> vars, std::size_t d,
                            std::size_t guard) {
  const std::vector<std::size_t> max(vars.size(), d);
  const std::size_t size = grid_size(max);
  if (size > guard) {
    throw GuardExceeded("grid of " + std::to_string(vars.size()) +
                        " variables at degree " + std::to_string(d) +
                        " exceeds the guard of " + std::to_string(guard) +
                        " points");
  }
  HittingSet h{{vars.begin(), vars.end()}, {}, GeneratorKind::kGrid};
  h.points.reserve(size);
  std::vector<Elem> point(vars.size(), 0);
  do {
    h.points.push_back(point);
  } while (next_grid_point(point, max));
  return h;
}

HittingSet roabp_hitting_set(const PrimeField& field,
                             std::span<const std::size_t> vars, std::size_t w,
                             std::size_t d, const GeneratorConfig& config,
                             std::uint64_t stream) {
  switch (config.kind) {
    case GeneratorKind::kGrid:
      return grid_hitting_set(vars, d, config.guard);
    case GeneratorKind::kRandom: {
      std::size_t count = config.count.value_or(0);
      if (!config.count) {
        const double base = static_cast<double>(vars.size()) *
                            static_cast<double>(w) * static_cast<double>(d);
        count = static_cast<std::size_t>(
            std::min(base * base, static_cast<double>(config.guard) + 1));
        count = std::max<std::size_t>(count, 1);
      }
      if (count > config.guard) {
        throw GuardExceeded("random hitting set of " + std::to_string(count) +
                            " points exceeds the guard");
      }
      std::seed_seq seq{static_cast<std::uint32_t>(config.seed),
                        static_cast<std::uint32_t>(config.seed >> 32),
                        static_cast<std::uint32_t>(stream),
                        static_cast<std::uint32_t>(stream >> 32)};
      std::mt19937_64 rng(seq);
      std::uniform_int_distribution<Elem> dist(0, field.prime() - 1);
      HittingSet h{{vars.begin(), vars.end()}, {}, GeneratorKind::kRandom};
      h.points.resize(count, std::vector<Elem>(vars.size()));
      for (auto& p : h.points) {
        for (Elem& e : p) e = dist(rng);
      }
      return h;
    }
    case GeneratorKind::kExternal: {
      if (config.external_points.empty()) {
        throw PitError("external generator has no points");
      }
      HittingSet h{{vars.begin(), vars.end()}, {}, GeneratorKind::kExternal};
      std::set<std::vector<Elem>> seen;
      for (const auto& full : config.external_points) {
        std::vector<Elem> p;
        for (std::size_t v : vars) {
          if (v >= full.size()) throw PitError("external point too short");
          p.push_back(full[v]);
        }
        if (seen.insert(p).second) h.points.push_back(std::move(p));
      }
      if (h.points.size() > config.guard) {
        throw GuardExceeded("external hitting set exceeds the guard");
      }
      return h;
    }
  }
  throw PitError("unknown generator");
}

namespace {

std::size_t saturating_pow(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && out > std::numeric_limits<std::size_t>::max() / base) {
      return std::numeric_limits<std::size_t>::max();
    }
    out *= base;
  }
  return out;
}

std::size_t collapsed_width(std::size_t w, std::size_t k) {
  return k <= 1 ? w : saturating_pow(w, 2 * k);
}

}  // namespace

HittingSet k_pass_hitting_set(const PrimeField& field, std::size_t w,
                              std::size_t d, std::size_t k,
                              std::span<const std::size_t> order,
                              const GeneratorConfig& config) {
  return roabp_hitting_set(field, order, collapsed_width(w, k), d, config);
}

std::vector<std::vector<Elem>> load_external_points(const std::string& path,
                                                    std::size_t num_vars,
                                                    const PrimeField& field) {
  std::ifstream in(path);
  if (!in) throw PitError("cannot read hitting-set file " + path);
  std::vector<std::vector<Elem>> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ss(line);
    std::vector<Elem> p;
    std::string tok;
    while (ss >> tok) {
      std::size_t used = 0;
      unsigned long long v = 0;
      try {
        v = std::stoull(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size() || v >= field.prime()) {
        throw PitError(path + ":" + std::to_string(line_no) +
                       ": expected a field element, got '" + tok + "'");
      }
      p.push_back(static_cast<Elem>(v));
    }
    if (p.size() != num_vars) {
      throw PitError(path + ":" + std::to_string(line_no) + ": expected " +
                     std::to_string(num_vars) + " values, got " +
                     std::to_string(p.size()));
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<std::size_t> choose_stage_vars(std::span<const std::size_t> reads,
                                           std::span<const std::size_t> active) {
  const std::set<std::size_t> act(active.begin(), active.end());
  std::map<std::size_t, std::size_t> counts;
  std::vector<std::size_t> seq;
  for (std::size_t v : reads) {
    if (act.count(v) == 0) continue;
    seq.push_back(v);
    ++counts[v];
  }
  if (seq.empty()) return {};
  std::size_t k = 0;
  for (const auto& [v, c] : counts) k = std::max(k, c);
  // Variables read fewer than k times get padding reads at the end.
  for (const auto& [v, c] : counts) seq.insert(seq.end(), k - c, v);
  const ReadSequence s = ReadSequence::from_elements(seq);
  const auto mono = per_read_monotone_subset(s);
  const ReadSequence pruned =
      seq_restrict(s, std::set<std::size_t>(mono.begin(), mono.end()));
  auto y = regularly_interleaving_subset(pruned);
  std::sort(y.begin(), y.end());
  return y;
}

std::vector<PitStage> plan_read_k(const ObliviousAbp& a,
                                  const GeneratorConfig& config) {
  const auto reads = a.read_order();
  const auto deg = a.variable_degrees();
  const auto counts = a.read_counts();
  std::size_t k = 0;
  std::vector<std::size_t> active;
  for (std::size_t v = 0; v < a.num_vars(); ++v) {
    if (counts[v] == 0) continue;
    active.push_back(v);
    k = std::max(k, counts[v]);
  }
  const std::size_t width = collapsed_width(a.width(), k);
  std::vector<PitStage> plan;
  while (!active.empty()) {
    auto y = choose_stage_vars(reads, active);
    if (y.empty()) throw PitError("internal error: empty stage");
    std::size_t d = 0;
    for (std::size_t v : y) d = std::max(d, deg[v]);
    PitStage stage{y, {}, width, d};
    stage.set = roabp_hitting_set(a.field(), y, width, d, config, plan.size());
    plan.push_back(std::move(stage));
    std::vector<std::size_t> rest;
    std::set_difference(active.begin(), active.end(), y.begin(), y.end(),
                        std::back_inserter(rest));
    active = std::move(rest);
  }
  return plan;
}

namespace {

std::optional<SparsePoly> fast_expand(const ObliviousAbp& a,
                                      std::size_t guard) {
  if (expansion_estimate(a) > guard) return std::nullopt;
  return abp_expand(a, guard);
}

}  // namespace

PitVerdict read_k_pit(const ObliviousAbp& a, const PitOptions& options) {
  const std::size_t n = a.num_vars();
  PitVerdict verdict;
  verdict.provenance = options.generator.kind;
  verdict.read_multiplicity = abp_validate(a).read_multiplicity;
  const auto plan = plan_read_k(a, options.generator);
  verdict.planned_iterations = plan.size();
  for (const auto& stage : plan) verdict.active_vars += stage.vars.size();

  std::vector<Elem> point(n, 0);
  ObliviousAbp cur = a;
  std::optional<SparsePoly> poly = fast_expand(cur, options.expansion_guard);
  if (poly && poly->is_zero()) return verdict;

  for (const auto& stage : plan) {
    PitIteration it{stage.vars, {}, stage.set.points.size(), 0};
    bool found = false;
    for (const auto& candidate : stage.set.points) {
      ++it.candidates_tried;
      Assignment asg;
      for (std::size_t j = 0; j < stage.vars.size(); ++j) {
        asg[stage.vars[j]] = candidate[j];
      }
      if (poly) {
        SparsePoly rest = poly_substitute(*poly, asg);
        if (rest.is_zero()) continue;
        poly = std::move(rest);
        cur = abp_restrict(cur, asg);
      } else {
        ObliviousAbp restricted = abp_restrict(cur, asg);
        std::optional<SparsePoly> p =
            fast_expand(restricted, options.expansion_guard);
        const bool nonzero =
            p ? !p->is_zero() : !read_k_pit(restricted, options).is_zero;
        if (!nonzero) continue;
        cur = std::move(restricted);
        poly = std::move(p);
      }
      it.point = candidate;
      for (std::size_t j = 0; j < stage.vars.size(); ++j) {
        point[stage.vars[j]] = candidate[j];
      }
      found = true;
      break;
    }
    verdict.iterations.push_back(std::move(it));
    if (!found) return verdict;
  }
  // Every read variable is fixed; unread ones stay 0.
  if (abp_evaluate(a, point) == 0) {
    if (!plan.empty()) {
      throw PitError("internal error: assembled witness evaluates to zero");
    }
    return verdict;
  }
  verdict.is_zero = false;
  verdict.witness = std::move(point);
  return verdict;
}

double iteration_bound(std::size_t n, std::size_t k) {
  if (k == 0) return 0.0;
  const double p = std::ldexp(1.0, -static_cast<int>(k - 1));
  return 2.0 * std::pow(3.0, static_cast<double>(k * k)) *
         std::pow(static_cast<double>(n), 1.0 - p);
}

namespace {

// Closed interval of long doubles. Arithmetic widens by one ulp per bound,
// library functions by four.
struct Interval {
  long double lo;
  long double hi;
};

long double down(long double x, int ulps) {
  for (int i = 0; i < ulps; ++i) {
    x = std::nextafter(x, -std::numeric_limits<long double>::infinity());
  }
  return x;
}

long double up(long double x, int ulps) {
  for (int i = 0; i < ulps; ++i) {
    x = std::nextafter(x, std::numeric_limits<long double>::infinity());
  }
  return x;
}

Interval point(long double x) { return {x, x}; }

Interval iv_sub(Interval a, Interval b) {
  return {down(a.lo - b.hi, 1), up(a.hi - b.lo, 1)};
}

Interval iv_mul(Interval a, Interval b) {
  const long double c[] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {down(*std::min_element(c, c + 4), 1),
          up(*std::max_element(c, c + 4), 1)};
}

// Divisor must be positive.
Interval iv_div(Interval a, Interval b) {
  const long double c[] = {a.lo / b.lo, a.lo / b.hi, a.hi / b.lo, a.hi / b.hi};
  return {down(*std::min_element(c, c + 4), 1),
          up(*std::max_element(c, c + 4), 1)};
}

// x >= 1 fixed, exponent interval: pow is increasing in the exponent.
Interval iv_pow(long double x, Interval e) {
  return {down(std::pow(x, e.lo), 4), up(std::pow(x, e.hi), 4)};
}

// Increasing functions.
Interval iv_log1p(Interval a) {
  return {down(std::log1p(a.lo), 4), up(std::log1p(a.hi), 4)};
}
Interval iv_expm1(Interval a) {
  return {down(std::expm1(a.lo), 4), up(std::expm1(a.hi), 4)};
}

}  // namespace

bool iteration_bound_check(std::uint64_t n, double p, std::uint64_t r) {
  if (!(p > 0.0 && p < 1.0)) throw PitError("p must lie in (0, 1)");
  if (r < 1) throw PitError("r must be at least 1");
  if (n < 1) throw PitError("n must be at least 1");
  const long double x = static_cast<long double>(n);
  const Interval pp = point(p);
  const Interval s = iv_sub(point(1), pp);  // 1 - p
  const Interval rhs = iv_div(s, point(static_cast<long double>(r)));
  if (n == 1 && r == 1) {
    // n - n^p/r = 0, so the left side is exactly 1.
    return 1.0L >= rhs.hi;
  }
  // Left side = x^s (1 - (1-u)^s) with u = x^(p-1)/r in (0, 1).
  const Interval u =
      iv_div(iv_pow(x, iv_sub(pp, point(1))), point(static_cast<long double>(r)));
  if (u.hi >= 1.0L) throw PitError("interval too wide near u = 1");
  const Interval log_term = iv_log1p({-u.hi, -u.lo});
  const Interval e = iv_expm1(iv_mul(s, log_term));
  const Interval one_minus = {-e.hi, -e.lo};
  const Interval lhs = iv_mul(iv_pow(x, s), one_minus);
  return lhs.lo >= rhs.hi;
}

}  // namespace readk

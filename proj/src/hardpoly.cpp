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

#include "readk/hardpoly.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "readk/grid.hpp"
#include "readk/linalg.hpp"

namespace readk {
namespace {

UniPoly var_poly() { return UniPoly({0, 1}); }
UniPoly one() { return UniPoly::constant(1); }

// Width-2 chain summing the variables of one line: [1 x], [[1 x],[0 1]],
// ..., [[x],[1]].
void append_line_sum(std::vector<Layer>& layers,
                     const std::vector<std::size_t>& vars) {
  const std::size_t m = vars.size();
  for (std::size_t j = 0; j < m; ++j) {
    UniMatrix mat;
    if (m == 1) {
      mat = UniMatrix(1, 1);
      mat(0, 0) = var_poly();
    } else if (j == 0) {
      mat = UniMatrix(1, 2);
      mat(0, 0) = one();
      mat(0, 1) = var_poly();
    } else if (j + 1 == m) {
      mat = UniMatrix(2, 1);
      mat(0, 0) = var_poly();
      mat(1, 0) = one();
    } else {
      mat = UniMatrix(2, 2);
      mat(0, 0) = one();
      mat(0, 1) = var_poly();
      mat(1, 1) = one();
    }
    layers.push_back({vars[j], std::move(mat), false});
  }
}

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::string join(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

}  // namespace

std::size_t pn_var(std::size_t n, std::size_t i, std::size_t j) {
  return (i - 1) * n + (j - 1);
}

HardFamilyInstance gen_pn(const PrimeField& field, std::size_t n) {
  if (n == 0) throw HardPolyError("P_n needs n >= 1");
  const std::size_t nv = n * n;
  HardFamilyInstance inst;
  inst.family = Family::kPn;
  inst.n = n;
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      inst.var_names.push_back("x" + std::to_string(i) + "_" +
                               std::to_string(j));
    }
  }
  std::vector<Layer> layers;
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<std::size_t> row;
    for (std::size_t j = 1; j <= n; ++j) row.push_back(pn_var(n, i, j));
    append_line_sum(layers, row);
  }
  for (std::size_t j = 1; j <= n; ++j) {
    std::vector<std::size_t> col;
    for (std::size_t i = 1; i <= n; ++i) col.push_back(pn_var(n, i, j));
    append_line_sum(layers, col);
  }
  inst.realization = ObliviousAbp(field, nv, std::move(layers), 2, 1);
  if (n <= kPnSymbolicMax) {
    SparsePoly p = SparsePoly::constant(field, nv, 1);
    for (std::size_t line = 0; line < 2 * n; ++line) {
      SparsePoly sum(field, nv);
      for (std::size_t m = 1; m <= n; ++m) {
        const std::size_t v = line < n ? pn_var(n, line + 1, m)
                                       : pn_var(n, m, line - n + 1);
        sum = sum + SparsePoly::variable(field, nv, v);
      }
      p = p * sum;
    }
    inst.polynomial = std::move(p);
  }
  return inst;
}

std::vector<std::vector<std::size_t>> qn_matchings(std::size_t n) {
  std::vector<std::vector<std::size_t>> out(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[i][j] = (j + i + 1) % n;
  }
  return out;
}

HardFamilyInstance gen_qn(const PrimeField& field, std::size_t n) {
  if (n < 2) throw HardPolyError("Q_n needs n >= 2");
  const std::size_t nv = 3 * n;
  HardFamilyInstance inst;
  inst.family = Family::kQn;
  inst.n = n;
  inst.matchings = qn_matchings(n);
  for (const char* name : {"x", "y", "z"}) {
    for (std::size_t j = 1; j <= n; ++j) {
      inst.var_names.push_back(name + std::to_string(j));
    }
  }
  std::vector<ObliviousAbp> summands;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Layer> layers;
    UniMatrix z(1, 1);
    z(0, 0) = var_poly();
    layers.push_back({2 * n + i, std::move(z), false});
    for (std::size_t j = 0; j < n; ++j) {
      UniMatrix x(1, 2);
      x(0, 0) = var_poly();
      x(0, 1) = one();
      UniMatrix y(2, 1);
      y(0, 0) = one();
      y(1, 0) = var_poly();
      layers.push_back({j, std::move(x), false});
      layers.push_back({n + inst.matchings[i][j], std::move(y), false});
    }
    summands.emplace_back(field, nv, std::move(layers));
  }
  inst.realization = abp_sequential_sum(summands);
  if (n <= kQnSymbolicMax) {
    SparsePoly q(field, nv);
    for (std::size_t i = 0; i < n; ++i) {
      SparsePoly term = SparsePoly::variable(field, nv, 2 * n + i);
      for (std::size_t j = 0; j < n; ++j) {
        term = term * (SparsePoly::variable(field, nv, j) +
                       SparsePoly::variable(field, nv,
                                            n + inst.matchings[i][j]));
      }
      q = q + term;
    }
    inst.polynomial = std::move(q);
  }
  return inst;
}

BlockPartition block_partition(const ObliviousAbp& a, std::size_t r,
                               bool greedy) {
  const AbpClass cls = abp_validate(a);
  const ObliviousAbp& norm = cls.normalized;
  std::vector<std::size_t> layer_of;  // read position -> layer index
  std::vector<std::size_t> reads;
  for (std::size_t j = 0; j < norm.num_layers(); ++j) {
    if (norm.layers()[j].var) {
      layer_of.push_back(j);
      reads.push_back(*norm.layers()[j].var);
    }
  }
  const std::size_t L = reads.size();
  if (r == 0 || r > L) {
    throw HardPolyError("block count " + std::to_string(r) +
                        " must lie in [1, " + std::to_string(L) + "]");
  }
  const std::size_t n = a.num_vars();
  BlockPartition bp;
  bp.r = r;
  bp.k = cls.read_multiplicity;
  bp.num_layers = L;
  std::vector<std::size_t> bound(r + 1);
  for (std::size_t s = 0; s <= r; ++s) bound[s] = s * L / r;
  std::vector<std::size_t> block_of(L);
  for (std::size_t s = 0; s < r; ++s) {
    for (std::size_t p = bound[s]; p < bound[s + 1]; ++p) block_of[p] = s;
  }
  std::vector<std::set<std::size_t>> var_blocks(n);
  for (std::size_t p = 0; p < L; ++p) var_blocks[reads[p]].insert(block_of[p]);

  auto covered = [&](const std::vector<std::size_t>& tuple) {
    std::size_t count = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (var_blocks[v].empty()) continue;
      if (std::includes(tuple.begin(), tuple.end(), var_blocks[v].begin(),
                        var_blocks[v].end())) {
        ++count;
      }
    }
    return count;
  };

  const std::size_t kk = std::min(bp.k, r);
  std::vector<std::size_t> best;
  if (!greedy) {
    std::vector<std::size_t> tuple(kk);
    std::iota(tuple.begin(), tuple.end(), 0);
    std::size_t best_count = 0;
    do {
      const std::size_t c = covered(tuple);
      if (best.empty() || c > best_count) {
        best = tuple;
        best_count = c;
      }
    } while (kk > 0 && next_combination(tuple, r));
  } else {
    for (std::size_t step = 0; step < kk; ++step) {
      std::size_t pick = r;
      std::size_t pick_count = 0;
      for (std::size_t b = 0; b < r; ++b) {
        if (std::find(best.begin(), best.end(), b) != best.end()) continue;
        auto trial = best;
        trial.insert(std::upper_bound(trial.begin(), trial.end(), b), b);
        const std::size_t c = covered(trial);
        if (pick == r || c > pick_count) {
          pick = b;
          pick_count = c;
        }
      }
      best.insert(std::upper_bound(best.begin(), best.end(), pick), pick);
    }
  }
  bp.block_ids = best;
  std::set<std::size_t> touched;
  for (std::size_t b : best) {
    bp.blocks.emplace_back(layer_of[bound[b]], layer_of[bound[b + 1] - 1] + 1);
    for (std::size_t p = bound[b]; p < bound[b + 1]; ++p) {
      touched.insert(reads[p]);
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    const bool in_u = !var_blocks[v].empty() &&
                      std::includes(best.begin(), best.end(),
                                    var_blocks[v].begin(), var_blocks[v].end());
    if (in_u) {
      bp.u.push_back(v);
    } else if (touched.count(v)) {
      bp.w.push_back(v);
    } else {
      bp.v.push_back(v);
    }
  }
  bp.w_bound_holds = bp.w.size() * r <= bp.k * bp.k * L;
  bp.n_over_10_applicable = 10 * bp.k * bp.k <= L;
  return bp;
}

Elimination eliminate_summand(std::span<const Roabp> parts, std::size_t t) {
  if (parts.empty()) throw HardPolyError("no summands");
  const PrimeField& F = parts.front().abp.field();
  const std::size_t n = parts.front().abp.num_vars();
  if (t == 0 || t >= n) {
    throw HardPolyError("prefix size t must satisfy 0 < t < n");
  }
  std::size_t w = 1;
  for (const auto& p : parts) {
    if (p.abp.num_vars() != n || p.order.size() != n) {
      throw HardPolyError("summands must be read-once over the same variables");
    }
    w = std::max(w, p.abp.realized_width());
  }
  Elimination out;
  const Roabp& first = parts.front();
  out.s.assign(first.order.begin(), first.order.begin() + t);

  // Smallest box {0..g}^t with at least w+1 points; the first w+1 points.
  std::size_t g = 0;
  while (grid_size(std::vector<std::size_t>(t, g)) < w + 1) ++g;
  if (g >= F.prime()) throw HardPolyError("field too small for the grid");
  const std::vector<std::size_t> max(t, g);
  std::vector<Elem> pt(t, 0);
  do {
    out.assignments.push_back(pt);
  } while (out.assignments.size() < w + 1 && next_grid_point(pt, max));

  // Row vectors u(a) = R_1(a_1) ... R_t(a_t) of the first summand.
  const auto& layers = first.abp.layers();
  const auto wt = static_cast<Eigen::Index>(layers[t - 1].matrix.cols());
  FMatrix u(static_cast<Eigen::Index>(w + 1), wt);
  for (std::size_t i = 0; i <= w; ++i) {
    FMatrix row = FMatrix::Ones(1, 1);
    for (std::size_t j = 0; j < t; ++j) {
      row = mat_mul(F, row,
                    layers[j].matrix.evaluate(F, out.assignments[i][j]));
    }
    u.row(static_cast<Eigen::Index>(i)) = row;
  }
  const FMatrix kernel = null_space(F, FMatrix(u.transpose()));
  if (kernel.cols() == 0) throw HardPolyError("internal error: no dependency");
  for (Eigen::Index i = 0; i < kernel.rows(); ++i) {
    out.alpha.push_back(kernel(i, 0));
  }

  for (std::size_t j = 1; j < parts.size(); ++j) {
    std::vector<ObliviousAbp> copies;
    for (const auto& a : out.assignments) {
      Assignment asg;
      for (std::size_t m = 0; m < t; ++m) asg[out.s[m]] = a[m];
      copies.push_back(abp_restrict(parts[j].abp, asg));
    }
    ObliviousAbp sum = abp_fold_constants(abp_parallel_sum(copies, out.alpha));
    Roabp res;
    for (std::size_t v : parts[j].order) {
      if (std::find(out.s.begin(), out.s.end(), v) == out.s.end()) {
        res.order.push_back(v);
      }
    }
    res.width_profile = realized_cut_widths(sum);
    res.abp = std::move(sum);
    out.residuals.push_back(std::move(res));
  }
  return out;
}

EliminationCheck check_elimination(std::span<const Roabp> parts,
                                   std::size_t t, const Elimination& e) {
  EliminationCheck c;
  const PrimeField& F = parts.front().abp.field();
  std::size_t w = 1;
  for (const auto& p : parts) w = std::max(w, p.abp.realized_width());
  c.width_bound = w * (w + 1);
  c.alpha_nonzero = std::any_of(e.alpha.begin(), e.alpha.end(),
                                [](Elem a) { return a != 0; });
  auto combination = [&](const Roabp& part) {
    const SparsePoly f = abp_expand(part.abp);
    SparsePoly acc(F, f.num_vars());
    for (std::size_t i = 0; i < e.assignments.size(); ++i) {
      Assignment asg;
      for (std::size_t m = 0; m < t; ++m) asg[e.s[m]] = e.assignments[i][m];
      acc = acc + scale(poly_substitute(f, asg), e.alpha[i]);
    }
    return acc;
  };
  c.annihilates = combination(parts.front()).is_zero();
  c.residuals_match = e.residuals.size() + 1 == parts.size();
  for (std::size_t j = 0; j + 1 < parts.size() && j < e.residuals.size(); ++j) {
    const auto& res = e.residuals[j];
    c.max_residual_width =
        std::max(c.max_residual_width, res.abp.realized_width());
    if (!(abp_expand(res.abp) == combination(parts[j + 1]))) {
      c.residuals_match = false;
    }
  }
  return c;
}

ProjectionResult pn_projection_step(std::size_t n,
                                    std::span<const std::size_t> s,
                                    const SparsePoly& g, std::mt19937_64& rng) {
  const PrimeField& F = g.field();
  const std::size_t t = s.size();
  if (t >= n) throw HardPolyError("projection needs |S| < n");
  if (g.num_vars() != n * n) throw HardPolyError("g is not over n^2 variables");
  if (g.is_zero()) throw HardPolyError("g must be nonzero");
  std::set<std::size_t> rows, cols;
  const std::set<std::size_t> s_set(s.begin(), s.end());
  for (std::size_t v : s) {
    rows.insert(v / n);
    cols.insert(v % n);
  }
  for (std::size_t i = 0; rows.size() < t; ++i) rows.insert(i);
  for (std::size_t j = 0; cols.size() < t; ++j) cols.insert(j);

  std::uniform_int_distribution<Elem> dist(0, F.prime() - 1);
  Assignment fixed;
  SparsePoly cur(F, n * n);
  bool ok = false;
  for (int attempt = 0; attempt < 100 && !ok; ++attempt) {
    fixed.clear();
    for (std::size_t v = 0; v < n * n; ++v) {
      if (s_set.count(v)) continue;
      if (rows.count(v / n) || cols.count(v % n)) fixed[v] = dist(rng);
    }
    cur = poly_substitute(g, fixed);
    ok = !cur.is_zero();
  }
  if (!ok) throw HardPolyError("no nonzero assignment found");

  std::vector<std::size_t> rest_rows, rest_cols;
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows.count(i)) rest_rows.push_back(i);
    if (!cols.count(i)) rest_cols.push_back(i);
  }
  // Offsets alpha_i, beta_j contributed by the fixed columns and rows.
  std::map<std::size_t, Elem> alpha, beta;
  for (std::size_t i : rest_rows) {
    Elem a = 0;
    for (std::size_t j : cols) a = F.add(a, fixed[i * n + j]);
    alpha[i] = a;
  }
  for (std::size_t j : rest_cols) {
    Elem b = 0;
    for (std::size_t i : rows) b = F.add(b, fixed[i * n + j]);
    beta[j] = b;
  }
  const std::size_t last_r = rest_rows.back();
  const std::size_t last_c = rest_cols.back();
  Assignment more;
  for (std::size_t i : rest_rows) {
    if (i != last_r) more[i * n + last_c] = F.neg(alpha[i]);
  }
  for (std::size_t j : rest_cols) {
    if (j != last_c) more[last_r * n + j] = F.neg(beta[j]);
  }
  SparsePoly base = poly_substitute(cur, more);
  ProjectionResult res;
  SparsePoly projected(F, 0);
  for (Elem y = 0; y < F.prime(); ++y) {
    SparsePoly cand = poly_substitute(base, {{last_r * n + last_c, y}});
    if (!cand.is_zero()) {
      projected = std::move(cand);
      break;
    }
  }
  if (projected.is_zero()) throw HardPolyError("projection vanished");

  const std::size_t m = n - t - 1;
  std::vector<std::size_t> mapping(n * n, 0);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      mapping[rest_rows[a] * n + rest_cols[b]] = a * m + b;
    }
  }
  res.projected = poly_rename(projected, mapping, m * m);
  const SparsePoly target = m == 0 ? SparsePoly::constant(F, 0, 1)
                                   : *gen_pn(F, m).polynomial;
  // Compare leading coefficients, then the whole polynomial.
  const std::size_t last = res.projected.size() - 1;
  res.scale = F.mul(res.projected.coeff(last),
                    F.inv(target.coeff(target.size() - 1)));
  res.matches = res.projected == scale(target, res.scale);
  return res;
}

std::vector<ExperimentRow> experiment_pn_evaldim(
    const PrimeField& field, std::size_t n, std::span<const std::size_t> sizes) {
  if (n > kPnSymbolicMax) {
    throw GuardExceeded("P_n symbolic form is limited to n <= " +
                        std::to_string(kPnSymbolicMax));
  }
  const HardFamilyInstance inst = gen_pn(field, n);
  const SparsePoly& p = *inst.polynomial;
  const std::size_t nv = n * n;
  std::vector<ExperimentRow> rows;
  for (std::size_t t : sizes) {
    if (t > nv) continue;
    const std::size_t floor =
        std::size_t{1} << static_cast<std::size_t>(
            std::ceil(std::sqrt(static_cast<double>(t))));
    std::vector<std::size_t> subset(t);
    std::iota(subset.begin(), subset.end(), 0);
    do {
      std::vector<bool> in(nv, false);
      for (std::size_t v : subset) in[v] = true;
      std::vector<std::size_t> rest;
      for (std::size_t v = 0; v < nv; ++v) {
        if (!in[v]) rest.push_back(v);
      }
      ExperimentRow row;
      row.subset = "S=" + join(subset);
      row.size = t;
      row.dimension = partial_derivative_rank(p, subset, rest);
      row.floor = floor;
      row.pass = row.dimension >= floor;
      rows.push_back(std::move(row));
    } while (t > 0 && next_combination(subset, nv));
  }
  return rows;
}

std::size_t qn_cross_edges(std::size_t n, const std::vector<bool>& in_s,
                           const std::vector<bool>& in_t) {
  const auto matchings = qn_matchings(n);
  std::size_t best = 0;
  for (const auto& m : matchings) {
    std::size_t count = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t x = j;
      const std::size_t y = n + m[j];
      if ((in_s[x] && in_t[y]) || (in_t[x] && in_s[y])) ++count;
    }
    best = std::max(best, count);
  }
  return best;
}

std::vector<ExperimentRow> experiment_qn_evaldim(const PrimeField& field,
                                                 std::size_t n,
                                                 std::size_t trials,
                                                 std::uint64_t seed) {
  if (n > kQnSymbolicMax) {
    throw GuardExceeded("Q_n rank experiments are limited to n <= " +
                        std::to_string(kQnSymbolicMax));
  }
  const HardFamilyInstance inst = gen_qn(field, n);
  const SparsePoly& q = *inst.polynomial;
  std::mt19937_64 rng(seed);
  const std::size_t xy = 2 * n;
  const auto min_cover = static_cast<std::size_t>(std::ceil(0.9 * xy - 1e-9));
  std::vector<ExperimentRow> rows;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    const std::size_t cover =
        std::uniform_int_distribution<std::size_t>(min_cover, xy)(rng);
    std::vector<std::size_t> pool(xy);
    std::iota(pool.begin(), pool.end(), 0);
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<bool> in_s(3 * n, false), in_t(3 * n, false);
    for (std::size_t i = 0; i < cover; ++i) {
      (std::bernoulli_distribution(0.5)(rng) ? in_s : in_t)[pool[i]] = true;
    }
    std::vector<std::size_t> s, t, r;
    for (std::size_t v = 0; v < 3 * n; ++v) {
      (in_s[v] ? s : in_t[v] ? t : r).push_back(v);
    }
    EvalDimOptions opts;
    opts.trials = 3;
    opts.seed = rng();
    opts.want_basis = false;
    ExperimentRow row;
    row.subset = "S=" + join(s) + ";T=" + join(t);
    row.size = qn_cross_edges(n, in_s, in_t);
    row.dimension = eval_dim(q, s, t, r, opts).dimension;
    row.floor = std::size_t{1} << row.size;
    row.pass = row.dimension >= row.floor;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace readk

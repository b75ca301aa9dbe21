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

#include "readk/evaldim.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>

#include "readk/grid.hpp"
#include "readk/linalg.hpp"

namespace readk {
namespace {

using Key = std::vector<Exponent>;

void check_partition(std::size_t n, std::span<const std::size_t> s,
                     std::span<const std::size_t> t,
                     std::span<const std::size_t> r) {
  std::vector<int> seen(n, 0);
  for (auto part : {s, t, r}) {
    for (std::size_t v : part) {
      if (v >= n) throw EvalDimError("variable index out of range");
      if (seen[v]++) throw EvalDimError("index sets overlap");
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end()) {
    throw EvalDimError("index sets do not cover all variables");
  }
}

void check_order(std::size_t n, std::span<const std::size_t> order) {
  if (order.size() != n) throw EvalDimError("order must list every variable");
  std::vector<bool> seen(n, false);
  for (std::size_t v : order) {
    if (v >= n || seen[v]) throw EvalDimError("order is not a permutation");
    seen[v] = true;
  }
}

// Restrictions f|_{S=a} as vectors indexed by the monomials of f in the
// remaining variables.
class RestrictionSpace {
 public:
  RestrictionSpace(const SparsePoly& f, std::span<const std::size_t> s)
      : field_(f.field()), s_(s.begin(), s.end()) {
    std::vector<bool> in_s(f.num_vars(), false);
    for (std::size_t v : s_) in_s[v] = true;
    for (std::size_t i = 0; i < f.size(); ++i) {
      auto e = f.exponents(i);
      Key key(e.begin(), e.end());
      std::vector<Exponent> se;
      for (std::size_t v : s_) {
        se.push_back(e[v]);
        key[v] = 0;
      }
      auto [it, inserted] = columns_.try_emplace(key, columns_.size());
      terms_.push_back({it->second, f.coeff(i), std::move(se)});
    }
    keys_.resize(columns_.size());
    for (const auto& [k, c] : columns_) keys_[c] = k;
  }

  std::size_t dim() const { return columns_.size(); }
  const Key& key(std::size_t column) const { return keys_[column]; }
  std::optional<std::size_t> column_of(const Key& k) const {
    auto it = columns_.find(k);
    if (it == columns_.end()) return std::nullopt;
    return it->second;
  }

  std::vector<Elem> vector_at(std::span<const Elem> a) const {
    std::vector<Elem> out(dim(), 0);
    for (const auto& term : terms_) {
      Elem m = term.coeff;
      for (std::size_t j = 0; j < s_.size() && m != 0; ++j) {
        m = field_.mul(m, field_.pow(a[j], term.s_exps[j]));
      }
      out[term.column] = field_.add(out[term.column], m);
    }
    return out;
  }

 private:
  struct TermInfo {
    std::size_t column;
    Elem coeff;
    std::vector<Exponent> s_exps;
  };
  PrimeField field_;
  std::vector<std::size_t> s_;
  std::map<Key, std::size_t> columns_;
  std::vector<Key> keys_;
  std::vector<TermInfo> terms_;
};

// Row basis kept in insertion order; each row is reduced against all
// earlier rows and scaled to pivot 1.
class IncrementalBasis {
 public:
  explicit IncrementalBasis(const PrimeField& field) : field_(field) {}

  bool try_add(std::vector<Elem> v) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Elem c = v[pivots_[i]];
      if (c == 0) continue;
      const Elem f = field_.neg(c);
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (rows_[i][j] != 0) v[j] = field_.fma(v[j], f, rows_[i][j]);
      }
    }
    auto it = std::find_if(v.begin(), v.end(), [](Elem x) { return x != 0; });
    if (it == v.end()) return false;
    const std::size_t p = static_cast<std::size_t>(it - v.begin());
    const Elem inv = field_.inv(v[p]);
    for (Elem& x : v) x = field_.mul(x, inv);
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }
  std::size_t rank() const { return rows_.size(); }

 private:
  PrimeField field_;
  std::vector<std::vector<Elem>> rows_;
  std::vector<std::size_t> pivots_;
};

// Greedy lexicographic scan of the grid over `s` for assignments whose
// restrictions are independent, stopping at `target` of them.
std::vector<std::vector<Elem>> greedy_basis(const SparsePoly& f,
                                            const RestrictionSpace& space,
                                            std::span<const std::size_t> s,
                                            std::size_t target,
                                            std::size_t guard) {
  std::vector<std::vector<Elem>> out;
  if (target == 0) return out;
  std::vector<std::size_t> max;
  for (std::size_t v : s) max.push_back(f.degree_in(v));
  if (grid_size(max) > guard) {
    throw GuardExceeded("basis grid has more than " + std::to_string(guard) +
                        " points");
  }
  IncrementalBasis basis(f.field());
  std::vector<Elem> point(s.size(), 0);
  do {
    if (basis.try_add(space.vector_at(point))) {
      out.push_back(point);
      if (out.size() == target) break;
    }
  } while (next_grid_point(point, max));
  if (out.size() != target) {
    throw EvalDimError("grid did not reach the evaluation dimension");
  }
  return out;
}

}  // namespace

std::size_t partial_derivative_rank(const SparsePoly& f,
                                    std::span<const std::size_t> s,
                                    std::span<const std::size_t> t) {
  check_partition(f.num_vars(), s, t, {});
  if (f.is_zero()) return 0;
  std::map<Key, Eigen::Index> rows, cols;
  std::vector<std::tuple<Key, Key, Elem>> entries;
  for (std::size_t i = 0; i < f.size(); ++i) {
    auto e = f.exponents(i);
    Key ks, kt;
    for (std::size_t v : s) ks.push_back(e[v]);
    for (std::size_t v : t) kt.push_back(e[v]);
    rows.try_emplace(ks, static_cast<Eigen::Index>(rows.size()));
    cols.try_emplace(kt, static_cast<Eigen::Index>(cols.size()));
    entries.emplace_back(std::move(ks), std::move(kt), f.coeff(i));
  }
  FMatrix m = FMatrix::Zero(static_cast<Eigen::Index>(rows.size()),
                            static_cast<Eigen::Index>(cols.size()));
  for (const auto& [ks, kt, c] : entries) m(rows[ks], cols[kt]) = c;
  return rank(f.field(), m);
}

EvalDimReport eval_dim(const SparsePoly& f, std::span<const std::size_t> s,
                       std::span<const std::size_t> t,
                       std::span<const std::size_t> r,
                       const EvalDimOptions& options) {
  check_partition(f.num_vars(), s, t, r);
  EvalDimReport report;
  report.s.assign(s.begin(), s.end());
  report.t.assign(t.begin(), t.end());
  report.r.assign(r.begin(), r.end());

  // Variables of R are eliminated; the rank is taken over S against T only.
  std::vector<std::size_t> t_and_r(t.begin(), t.end());
  t_and_r.insert(t_and_r.end(), r.begin(), r.end());
  SparsePoly best = f;
  if (r.empty()) {
    report.dimension = partial_derivative_rank(f, s, t_and_r);
  } else {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<Elem> dist(0, f.field().prime() - 1);
    const std::size_t trials = std::max<std::size_t>(options.trials, 1);
    for (std::size_t trial = 0; trial < trials; ++trial) {
      Assignment sub;
      for (std::size_t v : r) sub[v] = dist(rng);
      SparsePoly g = poly_substitute(f, sub);
      const std::size_t d = partial_derivative_rank(g, s, t_and_r);
      if (trial == 0 || d > report.dimension) {
        report.dimension = d;
        best = std::move(g);
      }
    }
  }
  if (options.want_basis && report.dimension > 0) {
    std::vector<std::size_t> max;
    for (std::size_t v : s) max.push_back(best.degree_in(v));
    if (grid_size(max) <= options.grid_guard) {
      RestrictionSpace space(best, s);
      report.basis_assignments = greedy_basis(best, space, s, report.dimension,
                                              options.grid_guard);
    }
  }
  return report;
}

std::vector<std::size_t> realized_cut_widths(const ObliviousAbp& a) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j + 1 < a.num_layers(); ++j) {
    out.push_back(a.layers()[j].matrix.cols());
  }
  return out;
}

std::vector<std::size_t> roabp_width_profile(
    const SparsePoly& f, std::span<const std::size_t> order) {
  const std::size_t n = f.num_vars();
  check_order(n, order);
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i < n; ++i) {
    out.push_back(partial_derivative_rank(f, order.subspan(0, i),
                                          order.subspan(i)));
  }
  return out;
}

Roabp roabp_synthesize(const SparsePoly& f, std::span<const std::size_t> order,
                       std::size_t grid_guard) {
  const PrimeField& F = f.field();
  const std::size_t n = f.num_vars();
  check_order(n, order);
  Roabp out;
  out.order.assign(order.begin(), order.end());
  if (n == 0) {
    const Elem c = f.is_zero() ? 0 : f.coeff(0);
    out.abp = ObliviousAbp(F, 0, {{std::nullopt,
                                   UniMatrix::from_constant(
                                       FMatrix::Constant(1, 1, c)),
                                   false}});
    return out;
  }
  if (f.is_zero()) {
    std::vector<Layer> layers;
    for (std::size_t v : order) layers.push_back({v, UniMatrix(1, 1), false});
    out.abp = ObliviousAbp(F, n, std::move(layers));
    out.width_profile = realized_cut_widths(out.abp);
    return out;
  }

  // Basis assignments and restriction spaces at cuts 0..n-1. Cut n uses the
  // constant 1 as its single basis vector.
  std::vector<RestrictionSpace> spaces;
  std::vector<std::vector<std::vector<Elem>>> bases;
  for (std::size_t i = 0; i < n; ++i) {
    auto prefix = order.subspan(0, i);
    spaces.emplace_back(f, prefix);
    const std::size_t r =
        i == 0 ? 1 : partial_derivative_rank(f, prefix, order.subspan(i));
    bases.push_back(greedy_basis(f, spaces.back(), prefix, r, grid_guard));
  }
  std::vector<std::size_t> max_deg(n);
  for (std::size_t v = 0; v < n; ++v) max_deg[v] = f.degree_in(v);

  std::vector<Layer> layers;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t x = order[i];
    const bool last = i + 1 == n;
    const std::size_t w_in = bases[i].size();
    const std::size_t w_out = last ? 1 : bases[i + 1].size();
    const std::size_t d = max_deg[x];
    const std::size_t m = last ? 1 : spaces[i + 1].dim();
    const std::size_t num_targets = w_in * (d + 1);
    // Columns: next basis vectors, then target (j, e) = coefficient of x^e
    // in f restricted at basis point j of this cut.
    FMatrix aug = FMatrix::Zero(static_cast<Eigen::Index>(m),
                                static_cast<Eigen::Index>(w_out + num_targets));
    if (last) {
      aug(0, 0) = 1;
    } else {
      for (std::size_t l = 0; l < w_out; ++l) {
        const auto v = spaces[i + 1].vector_at(bases[i + 1][l]);
        for (std::size_t c = 0; c < m; ++c) {
          aug(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(l)) = v[c];
        }
      }
    }
    for (std::size_t j = 0; j < w_in; ++j) {
      const auto v = spaces[i].vector_at(bases[i][j]);
      for (std::size_t c = 0; c < v.size(); ++c) {
        if (v[c] == 0) continue;
        Key key = spaces[i].key(c);
        const std::size_t e = key[x];
        key[x] = 0;
        std::size_t row = 0;
        if (!last) {
          auto col = spaces[i + 1].column_of(key);
          if (!col) throw EvalDimError("restriction left the column space");
          row = *col;
        }
        const auto tc = static_cast<Eigen::Index>(w_out + j * (d + 1) + e);
        aug(static_cast<Eigen::Index>(row), tc) =
            F.add(aug(static_cast<Eigen::Index>(row), tc), v[c]);
      }
    }
    const Echelon ech = row_echelon(F, aug);
    if (ech.pivot_cols.size() < w_out ||
        ech.pivot_cols[w_out - 1] != static_cast<Eigen::Index>(w_out - 1) ||
        (ech.pivot_cols.size() > w_out)) {
      throw EvalDimError("restriction not in the span of the next basis");
    }
    UniMatrix mat(w_in, w_out);
    for (std::size_t j = 0; j < w_in; ++j) {
      for (std::size_t l = 0; l < w_out; ++l) {
        std::vector<Elem> coeffs(d + 1);
        for (std::size_t e = 0; e <= d; ++e) {
          coeffs[e] = ech.reduced(static_cast<Eigen::Index>(l),
                                  static_cast<Eigen::Index>(w_out + j * (d + 1) + e));
        }
        mat(j, l) = UniPoly(std::move(coeffs));
      }
    }
    layers.push_back({x, std::move(mat), false});
  }
  out.abp = ObliviousAbp(F, n, std::move(layers));
  out.width_profile = realized_cut_widths(out.abp);
  return out;
}

std::size_t k_gap_check(const ObliviousAbp& a,
                        const std::set<std::size_t>& prefix) {
  std::vector<std::size_t> reads;
  for (const auto& l : a.layers()) {
    if (l.var && !l.matrix.is_constant()) reads.push_back(*l.var);
  }
  return interface_count(reads, prefix);
}

std::size_t k_gap_check(const ObliviousAbp& a, std::size_t prefix_len) {
  std::set<std::size_t> prefix;
  for (std::size_t v = 0; v < prefix_len; ++v) prefix.insert(v);
  return k_gap_check(a, prefix);
}

GapProfile k_gap_profile(const ObliviousAbp& a,
                         std::span<const std::size_t> order) {
  check_order(a.num_vars(), order);
  GapProfile g;
  std::set<std::size_t> prefix;
  for (std::size_t i = 0; i <= order.size(); ++i) {
    if (i > 0) prefix.insert(order[i - 1]);
    const std::size_t t = k_gap_check(a, prefix);
    g.gaps.push_back(t);
    if (t > g.max_gap) {
      g.max_gap = t;
      g.worst_prefix = i;
    }
  }
  return g;
}

namespace {

// Constant-matrix layers become constant layers and are folded into their
// neighbours until none remain (or the program is a single constant).
ObliviousAbp strip_constants(const ObliviousAbp& a) {
  ObliviousAbp cur = a;
  for (;;) {
    bool changed = false;
    std::vector<Layer> layers = cur.layers();
    for (auto& l : layers) {
      if (l.var && l.matrix.is_constant()) {
        l.var.reset();
        l.padding = false;
        changed = true;
      }
    }
    if (!changed && std::all_of(layers.begin(), layers.end(),
                                [](const Layer& l) { return l.var; })) {
      return cur;
    }
    cur = abp_fold_constants(ObliviousAbp(cur.field(), cur.num_vars(),
                                          std::move(layers)));
    if (cur.num_layers() == 1 && !cur.layers()[0].var) return cur;
  }
}

struct Run {
  std::size_t begin;
  std::size_t end;
};

std::vector<Run> runs_of(const ObliviousAbp& a, const std::vector<bool>& in) {
  std::vector<Run> runs;
  const auto& layers = a.layers();
  for (std::size_t j = 0; j < layers.size(); ++j) {
    if (!in[*layers[j].var]) continue;
    if (!runs.empty() && runs.back().end == j) {
      runs.back().end = j + 1;
    } else {
      runs.push_back({j, j + 1});
    }
  }
  return runs;
}

UniMatrix elementary(std::size_t rows, std::size_t cols, std::size_t r,
                     std::size_t c) {
  UniMatrix m(rows, cols);
  m(r, c) = UniPoly::constant(1);
  return m;
}

UniMatrix uni_kron(const PrimeField& F, const UniMatrix& a, const UniMatrix& b) {
  UniMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          if (b(k, l).is_zero()) continue;
          out(i * b.rows() + k, j * b.cols() + l) = uni_mul(F, a(i, j), b(k, l));
        }
      }
    }
  }
  return out;
}

}  // namespace

Roabp k_gap_to_roabp(const ObliviousAbp& a, std::span<const std::size_t> order,
                     std::size_t k) {
  const PrimeField& F = a.field();
  const std::size_t n = a.num_vars();
  const GapProfile gaps = k_gap_profile(a, order);
  if (gaps.max_gap > k) {
    throw EvalDimError("prefix of length " +
                       std::to_string(gaps.worst_prefix) + " has " +
                       std::to_string(gaps.max_gap) +
                       " runs, more than the allowed " + std::to_string(k));
  }
  Roabp out;
  out.order.assign(order.begin(), order.end());
  const ObliviousAbp s = strip_constants(a);
  if (n == 0) {
    out.abp = s;
    return out;
  }
  if (!s.layers()[0].var) {
    // Constant polynomial: put the value on the first layer.
    std::vector<Layer> layers;
    for (std::size_t i = 0; i < n; ++i) {
      layers.push_back({order[i],
                        i == 0 ? s.layers()[0].matrix : UniMatrix::identity(1),
                        false});
    }
    out.abp = ObliviousAbp(F, n, std::move(layers));
    out.width_profile = realized_cut_widths(out.abp);
    return out;
  }

  const auto& L = s.layers();
  std::vector<bool> in(n, false);
  std::vector<Run> old_runs;
  std::vector<Layer> layers;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t y = order[i];
    in[y] = true;
    const std::vector<Run> new_runs = runs_of(s, in);
    UniMatrix transition = UniMatrix::identity(1);
    std::size_t o = 0;  // next old run to place
    for (const Run& q : new_runs) {
      std::vector<std::size_t> inner;  // old runs inside q
      while (o < old_runs.size() && old_runs[o].begin >= q.begin &&
             old_runs[o].end <= q.end) {
        inner.push_back(o++);
      }
      std::size_t row_count = 1;
      for (std::size_t r : inner) {
        row_count *= L[old_runs[r].begin].matrix.rows() *
                     L[old_runs[r].end - 1].matrix.cols();
      }
      const std::size_t qr = L[q.begin].matrix.rows();
      const std::size_t qc = L[q.end - 1].matrix.cols();
      UniMatrix factor(row_count, qr * qc);
      for (std::size_t row = 0; row < row_count; ++row) {
        // Decode the row into one elementary matrix per inner old run; the
        // first inner run is the most significant digit.
        std::vector<UniMatrix> subst(inner.size());
        std::size_t rest = row;
        for (std::size_t idx = inner.size(); idx-- > 0;) {
          const Run& r = old_runs[inner[idx]];
          const std::size_t rr = L[r.begin].matrix.rows();
          const std::size_t rc = L[r.end - 1].matrix.cols();
          const std::size_t digit = rest % (rr * rc);
          rest /= rr * rc;
          subst[idx] = elementary(rr, rc, digit / rc, digit % rc);
        }
        std::optional<UniMatrix> prod;
        std::size_t next_inner = 0;
        for (std::size_t j = q.begin; j < q.end;) {
          const UniMatrix* item;
          if (next_inner < inner.size() &&
              old_runs[inner[next_inner]].begin == j) {
            item = &subst[next_inner];
            j = old_runs[inner[next_inner]].end;
            ++next_inner;
          } else {
            item = &L[j].matrix;
            ++j;
          }
          prod = prod ? uni_mat_mul(F, *prod, *item) : *item;
        }
        for (std::size_t r = 0; r < qr; ++r) {
          for (std::size_t c = 0; c < qc; ++c) {
            factor(row, r * qc + c) = (*prod)(r, c);
          }
        }
      }
      transition = uni_kron(F, transition, factor);
    }
    if (o != old_runs.size()) {
      throw EvalDimError("internal error: prefix runs did not nest");
    }
    layers.push_back({y, std::move(transition), false});
    old_runs = new_runs;
  }
  out.abp = ObliviousAbp(F, n, std::move(layers));
  out.width_profile = realized_cut_widths(out.abp);
  return out;
}

Roabp k_gap_to_roabp(const ObliviousAbp& a) {
  std::vector<std::size_t> order(a.num_vars());
  std::iota(order.begin(), order.end(), 0);
  return k_gap_to_roabp(a, order, abp_validate(a).read_multiplicity);
}

Roabp k_pass_to_roabp(const ObliviousAbp& a) {
  const AbpClass cls = abp_validate(a);
  if (!cls.is_k_pass) {
    throw EvalDimError("program is not k-pass in a single order");
  }
  const auto& order = cls.pass_orders.front();
  if (cls.read_multiplicity == 1) {
    Roabp out{cls.normalized, order, realized_cut_widths(cls.normalized)};
    return out;
  }
  return k_gap_to_roabp(a, order, cls.read_multiplicity);
}

}  // namespace readk

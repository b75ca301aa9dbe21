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

#include "readk/abp.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace readk {
namespace {

FMatrix layer_value(const PrimeField& field, const Layer& layer,
                    std::span<const Elem> point) {
  if (!layer.var) return layer.matrix.constant_part();
  return layer.matrix.evaluate(field, point[*layer.var]);
}

std::size_t saturating_mul(std::size_t a, std::size_t b) {
  if (a != 0 && b > std::numeric_limits<std::size_t>::max() / a) {
    return std::numeric_limits<std::size_t>::max();
  }
  return a * b;
}

}  // namespace

ObliviousAbp::ObliviousAbp(PrimeField field, std::size_t num_vars,
                           std::vector<Layer> layers,
                           std::optional<std::size_t> declared_width,
                           std::optional<std::size_t> declared_degree)
    : field_(field), num_vars_(num_vars), layers_(std::move(layers)) {
  if (layers_.empty()) throw AbpError("an ABP needs at least one layer");
  if (layers_.front().matrix.rows() != 1) {
    throw AbpError("first layer must have exactly one row (the source)");
  }
  if (layers_.back().matrix.cols() != 1) {
    throw AbpError("last layer must have exactly one column (the sink)");
  }
  std::size_t realized_degree = 0;
  for (std::size_t j = 0; j < layers_.size(); ++j) {
    const Layer& l = layers_[j];
    if (l.matrix.rows() == 0 || l.matrix.cols() == 0) {
      throw AbpError("layer " + std::to_string(j) + " has an empty matrix");
    }
    if (j + 1 < layers_.size() &&
        l.matrix.cols() != layers_[j + 1].matrix.rows()) {
      throw AbpError("dimension mismatch between layers " + std::to_string(j) +
                     " and " + std::to_string(j + 1));
    }
    if (l.var && *l.var >= num_vars_) {
      throw AbpError("layer " + std::to_string(j) +
                     " reads a variable out of range");
    }
    if (!l.var && !l.matrix.is_constant()) {
      throw AbpError("layer " + std::to_string(j) +
                     " has no variable but non-constant entries");
    }
    for (std::size_t r = 0; r < l.matrix.rows(); ++r) {
      for (std::size_t c = 0; c < l.matrix.cols(); ++c) {
        for (Elem e : l.matrix(r, c).coeffs) {
          if (e >= field_.prime()) {
            throw AbpError("layer " + std::to_string(j) +
                           " has a non-canonical coefficient");
          }
        }
      }
    }
    realized_degree = std::max(realized_degree, l.matrix.degree());
  }
  const std::size_t w = realized_width();
  width_ = declared_width.value_or(w);
  degree_ = declared_degree.value_or(realized_degree);
  if (width_ < w) throw AbpError("realized width exceeds declared width");
  if (degree_ < realized_degree) {
    throw AbpError("realized degree exceeds declared degree");
  }
}

std::size_t ObliviousAbp::realized_width() const {
  std::size_t w = 1;
  for (const auto& l : layers_) {
    w = std::max({w, l.matrix.rows(), l.matrix.cols()});
  }
  return w;
}

std::vector<std::size_t> ObliviousAbp::read_order() const {
  std::vector<std::size_t> out;
  for (const auto& l : layers_) {
    if (l.var) out.push_back(*l.var);
  }
  return out;
}

std::vector<std::size_t> ObliviousAbp::read_counts() const {
  std::vector<std::size_t> counts(num_vars_, 0);
  for (const auto& l : layers_) {
    if (l.var) ++counts[*l.var];
  }
  return counts;
}

std::vector<std::size_t> ObliviousAbp::variable_degrees() const {
  std::vector<std::size_t> deg(num_vars_, 0);
  for (const auto& l : layers_) {
    if (l.var) deg[*l.var] += l.matrix.degree();
  }
  return deg;
}

ObliviousAbp abp_normalize(const ObliviousAbp& a, std::size_t k) {
  const auto counts = a.read_counts();
  std::vector<Layer> layers = a.layers();
  for (std::size_t v = 0; v < a.num_vars(); ++v) {
    if (counts[v] > k) {
      throw AbpError("variable " + std::to_string(v) + " is read more than " +
                     std::to_string(k) + " times");
    }
    for (std::size_t t = counts[v]; t < k; ++t) {
      layers.push_back({v, UniMatrix::identity(1), true});
    }
  }
  return ObliviousAbp(a.field(), a.num_vars(), std::move(layers), a.width(),
                      a.degree());
}

AbpClass abp_validate(const ObliviousAbp& a) {
  AbpClass cls;
  const auto counts = a.read_counts();
  cls.read_multiplicity =
      counts.empty() ? 0 : *std::max_element(counts.begin(), counts.end());
  cls.normalized = abp_normalize(a, cls.read_multiplicity);
  const std::size_t n = a.num_vars();
  const std::size_t k = cls.read_multiplicity;
  if (k == 0 || n == 0) return cls;
  const auto order = cls.normalized.read_order();
  bool varying = true;
  for (std::size_t pass = 0; pass < k && varying; ++pass) {
    std::vector<std::size_t> chunk(order.begin() + pass * n,
                                   order.begin() + (pass + 1) * n);
    std::vector<bool> seen(n, false);
    for (std::size_t v : chunk) {
      if (seen[v]) {
        varying = false;
        break;
      }
      seen[v] = true;
    }
    if (varying) cls.pass_orders.push_back(std::move(chunk));
  }
  if (!varying) {
    cls.pass_orders.clear();
    return cls;
  }
  cls.is_varying_order_k_pass = true;
  cls.is_k_pass = std::all_of(
      cls.pass_orders.begin(), cls.pass_orders.end(),
      [&](const auto& p) { return p == cls.pass_orders.front(); });
  return cls;
}

Elem abp_evaluate(const ObliviousAbp& a, std::span<const Elem> point) {
  if (point.size() != a.num_vars()) {
    throw AbpError("evaluation point has length " +
                   std::to_string(point.size()) + ", expected " +
                   std::to_string(a.num_vars()));
  }
  const PrimeField& F = a.field();
  FMatrix row = FMatrix::Ones(1, 1);
  for (const auto& layer : a.layers()) {
    row = mat_mul(F, row, layer_value(F, layer, point));
  }
  return row(0, 0);
}

std::size_t expansion_estimate(const ObliviousAbp& a) {
  std::size_t total = 1;
  for (std::size_t d : a.variable_degrees()) total = saturating_mul(total, d + 1);
  return total;
}

SparsePoly abp_expand(const ObliviousAbp& a, std::size_t guard) {
  const PrimeField& F = a.field();
  const std::size_t n = a.num_vars();
  const std::size_t total = expansion_estimate(a);
  if (total > guard) {
    throw GuardExceeded("expansion needs " + std::to_string(total) +
                        " coefficient slots, guard is " +
                        std::to_string(guard));
  }
  const auto deg = a.variable_degrees();
  // Mixed radix with variable 0 most significant, so increasing index is
  // increasing lexicographic exponent order.
  std::vector<std::size_t> stride(n, 1);
  for (std::size_t v = n; v-- > 1;) stride[v - 1] = stride[v] * (deg[v] + 1);

  using Dense = std::vector<Elem>;
  std::vector<Dense> state(1, Dense(total, 0));
  std::vector<std::size_t> hi(1, 1);  // one past the last nonzero slot
  state[0][0] = 1;
  for (const auto& layer : a.layers()) {
    const UniMatrix& m = layer.matrix;
    std::vector<Dense> next(m.cols(), Dense(total, 0));
    std::vector<std::size_t> next_hi(m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (hi[i] == 0) continue;
      const Dense& src = state[i];
      for (std::size_t j = 0; j < m.cols(); ++j) {
        const UniPoly& entry = m(i, j);
        Dense& dst = next[j];
        for (std::size_t e = 0; e < entry.coeffs.size(); ++e) {
          const Elem c = entry.coeffs[e];
          if (c == 0) continue;
          const std::size_t shift = layer.var ? e * stride[*layer.var] : 0;
          if (!layer.var && e > 0) break;
          const std::size_t end = std::min(hi[i], total - shift);
          for (std::size_t idx = 0; idx < end; ++idx) {
            if (src[idx] != 0) dst[idx + shift] = F.fma(dst[idx + shift], c, src[idx]);
          }
          next_hi[j] = std::max(next_hi[j], end + shift);
        }
      }
    }
    state = std::move(next);
    hi = std::move(next_hi);
  }
  std::vector<Exponent> exps;
  std::vector<Elem> coeffs;
  const Dense& out = state[0];
  for (std::size_t idx = 0; idx < hi[0]; ++idx) {
    if (out[idx] == 0) continue;
    std::size_t rest = idx;
    for (std::size_t v = 0; v < n; ++v) {
      exps.push_back(static_cast<Exponent>(rest / stride[v]));
      rest %= stride[v];
    }
    coeffs.push_back(out[idx]);
  }
  return SparsePoly::from_flat(F, n, std::move(exps), std::move(coeffs));
}

ObliviousAbp abp_restrict(const ObliviousAbp& a, const Assignment& assignment) {
  for (const auto& [var, value] : assignment) {
    if (var >= a.num_vars()) throw AbpError("assigned variable out of range");
    (void)value;
  }
  std::vector<Layer> layers;
  layers.reserve(a.num_layers());
  for (const auto& layer : a.layers()) {
    if (layer.var) {
      auto it = assignment.find(*layer.var);
      if (it != assignment.end()) {
        layers.push_back(
            {std::nullopt,
             UniMatrix::from_constant(layer.matrix.evaluate(
                 a.field(), it->second % a.field().prime())),
             false});
        continue;
      }
    }
    layers.push_back(layer);
  }
  return ObliviousAbp(a.field(), a.num_vars(), std::move(layers), a.width(),
                      a.degree());
}

ObliviousAbp abp_fold_constants(const ObliviousAbp& a) {
  const PrimeField& F = a.field();
  std::vector<Layer> out;
  std::optional<FMatrix> pending;
  for (const auto& layer : a.layers()) {
    if (!layer.var) {
      const FMatrix c = layer.matrix.constant_part();
      pending = pending ? mat_mul(F, *pending, c) : c;
      continue;
    }
    Layer l = layer;
    if (pending) {
      l.matrix = mul_const_left(F, *pending, l.matrix);
      pending.reset();
    }
    out.push_back(std::move(l));
  }
  if (pending) {
    if (out.empty()) {
      out.push_back({std::nullopt, UniMatrix::from_constant(*pending), false});
    } else {
      out.back().matrix = mul_const_right(F, out.back().matrix, *pending);
    }
  }
  return ObliviousAbp(F, a.num_vars(), std::move(out), a.width(), a.degree());
}

ReadSequence abp_read_sequence(const ObliviousAbp& a) {
  const AbpClass cls = abp_validate(a);
  const auto order = cls.normalized.read_order();
  return ReadSequence::from_elements(order);
}

ObliviousAbp abp_parallel_sum(std::span<const ObliviousAbp> parts,
                              std::span<const Elem> weights) {
  if (parts.empty()) throw AbpError("parallel sum of no programs");
  if (weights.size() != parts.size()) {
    throw AbpError("parallel sum needs one weight per program");
  }
  const PrimeField& F = parts.front().field();
  const std::size_t L = parts.front().num_layers();
  for (const auto& p : parts) {
    if (!(p.field() == F) || p.num_vars() != parts.front().num_vars() ||
        p.num_layers() != L) {
      throw AbpError("parallel sum needs programs of the same shape");
    }
    for (std::size_t j = 0; j < L; ++j) {
      if (p.layers()[j].var != parts.front().layers()[j].var) {
        throw AbpError("parallel sum needs identical layer variables");
      }
    }
  }
  std::vector<Layer> layers;
  for (std::size_t j = 0; j < L; ++j) {
    const bool first = j == 0;
    const bool last = j + 1 == L;
    std::vector<std::size_t> row_off(parts.size() + 1, 0);
    std::vector<std::size_t> col_off(parts.size() + 1, 0);
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const UniMatrix& m = parts[i].layers()[j].matrix;
      row_off[i + 1] = row_off[i] + (first ? 0 : m.rows());
      col_off[i + 1] = col_off[i] + (last ? 0 : m.cols());
    }
    UniMatrix out(first ? 1 : row_off.back(), last ? 1 : col_off.back());
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const UniMatrix& m = parts[i].layers()[j].matrix;
      for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
          const std::size_t rr = first ? 0 : row_off[i] + r;
          const std::size_t cc = last ? 0 : col_off[i] + c;
          UniPoly e = first ? uni_scale(F, m(r, c), weights[i] % F.prime())
                            : m(r, c);
          out(rr, cc) = uni_add(F, out(rr, cc), e);
        }
      }
    }
    layers.push_back(
        {parts.front().layers()[j].var, std::move(out), false});
  }
  return ObliviousAbp(F, parts.front().num_vars(), std::move(layers));
}

ObliviousAbp abp_sequential_sum(std::span<const ObliviousAbp> parts) {
  if (parts.empty()) throw AbpError("sequential sum of no programs");
  const PrimeField& F = parts.front().field();
  const std::size_t n = parts.front().num_vars();
  const UniPoly one = UniPoly::constant(1);
  std::vector<Layer> layers;
  for (const auto& p : parts) {
    if (!(p.field() == F) || p.num_vars() != n) {
      throw AbpError("sequential sum needs programs over the same variables");
    }
    const std::size_t L = p.num_layers();
    for (std::size_t j = 0; j < L; ++j) {
      const Layer& src = p.layers()[j];
      const UniMatrix& m = src.matrix;
      const bool first = j == 0;
      const bool last = j + 1 == L;
      // Boundary state is (acc, one); inside a part it is (v..., acc, one).
      const std::size_t rows = first ? 2 : m.rows() + 2;
      const std::size_t cols = last ? 2 : m.cols() + 2;
      const std::size_t acc_in = first ? 0 : m.rows();
      const std::size_t acc_out = last ? 0 : m.cols();
      UniMatrix out(rows, cols);
      out(acc_in, acc_out) = one;
      out(acc_in + 1, acc_out + 1) = one;
      for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
          const std::size_t rr = first ? acc_in + 1 : r;
          const std::size_t cc = last ? acc_out : c;
          out(rr, cc) = uni_add(F, out(rr, cc), m(r, c));
        }
      }
      layers.push_back({src.var, std::move(out), false});
    }
  }
  // Start in state (acc, one) = (0, 1) and read off acc at the end.
  UniMatrix& head = layers.front().matrix;
  UniMatrix trimmed_head(1, head.cols());
  for (std::size_t c = 0; c < head.cols(); ++c) trimmed_head(0, c) = head(1, c);
  head = std::move(trimmed_head);
  UniMatrix& tail = layers.back().matrix;
  UniMatrix trimmed_tail(tail.rows(), 1);
  for (std::size_t r = 0; r < tail.rows(); ++r) trimmed_tail(r, 0) = tail(r, 0);
  tail = std::move(trimmed_tail);
  return ObliviousAbp(F, n, std::move(layers));
}

ObliviousAbp abp_rename(const ObliviousAbp& a,
                        std::span<const std::size_t> mapping,
                        std::size_t new_num_vars) {
  if (mapping.size() != a.num_vars()) {
    throw AbpError("rename mapping has the wrong length");
  }
  std::vector<Layer> layers = a.layers();
  for (auto& l : layers) {
    if (l.var) l.var = mapping[*l.var];
  }
  return ObliviousAbp(a.field(), new_num_vars, std::move(layers), a.width(),
                      a.degree());
}

}  // namespace readk

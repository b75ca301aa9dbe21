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

#include "readk/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace readk {
namespace {

void check_compatible(const SparsePoly& f, const SparsePoly& g) {
  if (!(f.field() == g.field())) {
    throw PolyError("polynomials over different fields");
  }
  if (f.num_vars() != g.num_vars()) {
    throw PolyError("polynomials with different numbers of variables");
  }
}

}  // namespace

SparsePoly SparsePoly::constant(PrimeField field, std::size_t num_vars,
                                Elem c) {
  std::vector<Exponent> exps(num_vars, 0);
  return from_flat(field, num_vars, std::move(exps), {c});
}

SparsePoly SparsePoly::variable(PrimeField field, std::size_t num_vars,
                                std::size_t var) {
  if (var >= num_vars) throw PolyError("variable index out of range");
  std::vector<Exponent> exps(num_vars, 0);
  exps[var] = 1;
  return from_flat(field, num_vars, std::move(exps), {1});
}

SparsePoly SparsePoly::from_terms(PrimeField field, std::size_t num_vars,
                                  std::vector<Term> terms) {
  std::vector<Exponent> exps;
  std::vector<Elem> coeffs;
  exps.reserve(terms.size() * num_vars);
  coeffs.reserve(terms.size());
  for (auto& t : terms) {
    if (t.exponents.size() != num_vars) {
      throw PolyError("exponent vector length differs from num_vars");
    }
    exps.insert(exps.end(), t.exponents.begin(), t.exponents.end());
    coeffs.push_back(t.coeff);
  }
  return from_flat(field, num_vars, std::move(exps), std::move(coeffs));
}

SparsePoly SparsePoly::from_flat(PrimeField field, std::size_t num_vars,
                                 std::vector<Exponent> exps,
                                 std::vector<Elem> coeffs) {
  const std::size_t n = coeffs.size();
  if (exps.size() != n * num_vars) {
    throw PolyError("flat exponent storage has the wrong length");
  }
  auto key = [&](std::size_t i) {
    return std::span<const Exponent>(exps.data() + i * num_vars, num_vars);
  };
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  const bool sorted = std::is_sorted(
      order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return std::ranges::lexicographical_compare(key(a), key(b));
      });
  if (!sorted) {
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) {
                       return std::ranges::lexicographical_compare(key(a),
                                                                   key(b));
                     });
  }
  SparsePoly out(field, num_vars);
  out.exps_.reserve(exps.size());
  out.coeffs_.reserve(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    Elem acc = 0;
    while (j < n && std::ranges::equal(key(order[i]), key(order[j]))) {
      acc = field.add(acc, coeffs[order[j]] % field.prime());
      ++j;
    }
    if (acc != 0) {
      auto k = key(order[i]);
      out.exps_.insert(out.exps_.end(), k.begin(), k.end());
      out.coeffs_.push_back(acc);
    }
    i = j;
  }
  return out;
}

Elem SparsePoly::coefficient(std::span<const Exponent> monomial) const {
  std::size_t lo = 0;
  std::size_t hi = size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (std::ranges::lexicographical_compare(exponents(mid), monomial)) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (lo < size() && std::ranges::equal(exponents(lo), monomial)) {
    return coeffs_[lo];
  }
  return 0;
}

std::size_t SparsePoly::total_degree() const {
  std::size_t best = 0;
  for (std::size_t t = 0; t < size(); ++t) {
    std::size_t d = 0;
    for (Exponent e : exponents(t)) d += e;
    best = std::max(best, d);
  }
  return best;
}

std::size_t SparsePoly::degree_in(std::size_t var) const {
  std::size_t best = 0;
  for (std::size_t t = 0; t < size(); ++t) {
    best = std::max<std::size_t>(best, exps_[t * num_vars_ + var]);
  }
  return best;
}

std::size_t SparsePoly::individual_degree() const {
  return exps_.empty() ? 0 : *std::max_element(exps_.begin(), exps_.end());
}

Elem SparsePoly::evaluate(std::span<const Elem> point) const {
  if (point.size() != num_vars_) {
    throw PolyError("evaluation point has the wrong length");
  }
  Elem acc = 0;
  for (std::size_t t = 0; t < size(); ++t) {
    Elem m = coeffs_[t];
    auto e = exponents(t);
    for (std::size_t v = 0; v < num_vars_ && m != 0; ++v) {
      if (e[v] != 0) m = field_.mul(m, field_.pow(point[v], e[v]));
    }
    acc = field_.add(acc, m);
  }
  return acc;
}

bool SparsePoly::operator==(const SparsePoly& other) const {
  return field_ == other.field_ && num_vars_ == other.num_vars_ &&
         exps_ == other.exps_ && coeffs_ == other.coeffs_;
}

std::vector<SparsePoly::Term> SparsePoly::terms() const {
  std::vector<Term> out;
  out.reserve(size());
  for (std::size_t t = 0; t < size(); ++t) {
    auto e = exponents(t);
    out.push_back({std::vector<Exponent>(e.begin(), e.end()), coeffs_[t]});
  }
  return out;
}

SparsePoly poly_arith(const SparsePoly& f, const SparsePoly& g, PolyOp kind) {
  check_compatible(f, g);
  const PrimeField& F = f.field();
  const std::size_t n = f.num_vars();
  std::vector<Exponent> exps;
  std::vector<Elem> coeffs;
  if (kind == PolyOp::kMul) {
    exps.reserve(f.size() * g.size() * n);
    coeffs.reserve(f.size() * g.size());
    for (std::size_t a = 0; a < f.size(); ++a) {
      auto ea = f.exponents(a);
      for (std::size_t b = 0; b < g.size(); ++b) {
        auto eb = g.exponents(b);
        for (std::size_t v = 0; v < n; ++v) {
          exps.push_back(static_cast<Exponent>(ea[v] + eb[v]));
        }
        coeffs.push_back(F.mul(f.coeff(a), g.coeff(b)));
      }
    }
    return SparsePoly::from_flat(F, n, std::move(exps), std::move(coeffs));
  }
  // Both inputs are sorted, so a merge keeps the result sorted.
  std::size_t a = 0;
  std::size_t b = 0;
  auto emit = [&](std::span<const Exponent> e, Elem c) {
    if (c == 0) return;
    exps.insert(exps.end(), e.begin(), e.end());
    coeffs.push_back(c);
  };
  auto gc = [&](std::size_t i) {
    return kind == PolyOp::kSub ? F.neg(g.coeff(i)) : g.coeff(i);
  };
  while (a < f.size() || b < g.size()) {
    if (b == g.size() ||
        (a < f.size() && std::ranges::lexicographical_compare(
                             f.exponents(a), g.exponents(b)))) {
      emit(f.exponents(a), f.coeff(a));
      ++a;
    } else if (a == f.size() || std::ranges::lexicographical_compare(
                                    g.exponents(b), f.exponents(a))) {
      emit(g.exponents(b), gc(b));
      ++b;
    } else {
      emit(f.exponents(a), F.add(f.coeff(a), gc(b)));
      ++a;
      ++b;
    }
  }
  return SparsePoly::from_flat(F, n, std::move(exps), std::move(coeffs));
}

SparsePoly scale(const SparsePoly& f, Elem c) {
  const PrimeField& F = f.field();
  std::vector<Exponent> exps;
  std::vector<Elem> coeffs;
  if (c % F.prime() != 0) {
    for (std::size_t t = 0; t < f.size(); ++t) {
      auto e = f.exponents(t);
      exps.insert(exps.end(), e.begin(), e.end());
      coeffs.push_back(F.mul(f.coeff(t), c % F.prime()));
    }
  }
  return SparsePoly::from_flat(F, f.num_vars(), std::move(exps),
                               std::move(coeffs));
}

SparsePoly poly_substitute(const SparsePoly& f, const Assignment& assignment) {
  const PrimeField& F = f.field();
  const std::size_t n = f.num_vars();
  for (const auto& [var, value] : assignment) {
    if (var >= n) throw PolyError("assigned variable index out of range");
    (void)value;
  }
  if (assignment.empty()) return f;
  std::vector<Exponent> exps;
  std::vector<Elem> coeffs;
  exps.reserve(f.size() * n);
  coeffs.reserve(f.size());
  for (std::size_t t = 0; t < f.size(); ++t) {
    auto e = f.exponents(t);
    Elem c = f.coeff(t);
    std::size_t start = exps.size();
    exps.insert(exps.end(), e.begin(), e.end());
    for (const auto& [var, value] : assignment) {
      if (e[var] != 0) {
        c = F.mul(c, F.pow(value % F.prime(), e[var]));
        exps[start + var] = 0;
      }
    }
    coeffs.push_back(c);
  }
  return SparsePoly::from_flat(F, n, std::move(exps), std::move(coeffs));
}

SparsePoly poly_rename(const SparsePoly& f, std::span<const std::size_t> mapping,
                       std::size_t new_num_vars) {
  if (mapping.size() != f.num_vars()) {
    throw PolyError("rename mapping has the wrong length");
  }
  std::vector<Exponent> exps;
  std::vector<Elem> coeffs;
  for (std::size_t t = 0; t < f.size(); ++t) {
    std::vector<Exponent> e(new_num_vars, 0);
    auto src = f.exponents(t);
    for (std::size_t v = 0; v < f.num_vars(); ++v) {
      if (src[v] == 0) continue;
      if (mapping[v] >= new_num_vars) {
        throw PolyError("rename target out of range");
      }
      e[mapping[v]] = static_cast<Exponent>(e[mapping[v]] + src[v]);
    }
    exps.insert(exps.end(), e.begin(), e.end());
    coeffs.push_back(f.coeff(t));
  }
  return SparsePoly::from_flat(f.field(), new_num_vars, std::move(exps),
                               std::move(coeffs));
}

std::string to_string(const SparsePoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  for (std::size_t t = 0; t < f.size(); ++t) {
    if (t > 0) os << " + ";
    auto e = f.exponents(t);
    bool first = true;
    if (f.coeff(t) != 1 ||
        std::all_of(e.begin(), e.end(), [](Exponent x) { return x == 0; })) {
      os << f.coeff(t);
      first = false;
    }
    for (std::size_t v = 0; v < e.size(); ++v) {
      if (e[v] == 0) continue;
      if (!first) os << '*';
      os << 'x' << v;
      if (e[v] > 1) os << '^' << e[v];
      first = false;
    }
  }
  return os.str();
}

}  // namespace readk

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

#ifndef READK_FIELD_HPP_
#define READK_FIELD_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace readk {

// A field element is stored as its canonical residue in [0, p).
using Elem = std::uint32_t;

class FieldError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class FieldOp { kAdd, kSub, kMul, kInv };

// Arithmetic modulo a prime p < 2^31. Every operation returns a canonical
// residue; inputs are assumed canonical.
class PrimeField {
 public:
  static constexpr std::uint32_t kDefaultPrime = 101;

  PrimeField() : PrimeField(kDefaultPrime) {}
  explicit PrimeField(std::uint32_t p);

  std::uint32_t prime() const { return p_; }

  Elem reduce(std::int64_t v) const {
    const std::int64_t r = v % static_cast<std::int64_t>(p_);
    return static_cast<Elem>(r < 0 ? r + p_ : r);
  }
  Elem add(Elem a, Elem b) const {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
  }
  // Multiply-accumulate: acc + a*b.
  Elem fma(Elem acc, Elem a, Elem b) const {
    return static_cast<Elem>(
        (static_cast<std::uint64_t>(a) * b + acc) % p_);
  }
  Elem pow(Elem a, std::uint64_t e) const;
  // Throws FieldError on zero.
  Elem inv(Elem a) const;

  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

bool is_prime(std::uint64_t n);

Elem field_op(const PrimeField& field, Elem a, Elem b, FieldOp kind);

}  // namespace readk

#endif  // READK_FIELD_HPP_

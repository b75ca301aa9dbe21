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

#include "readk/field.hpp"

namespace readk {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw FieldError("field modulus must be a prime below 2^31, got " +
                     std::to_string(p));
  }
}

Elem PrimeField::pow(Elem a, std::uint64_t e) const {
  Elem result = 1 % p_;
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw FieldError("inversion of zero");
  return pow(a, p_ - 2);
}

Elem field_op(const PrimeField& field, Elem a, Elem b, FieldOp kind) {
  switch (kind) {
    case FieldOp::kAdd:
      return field.add(a, b);
    case FieldOp::kSub:
      return field.sub(a, b);
    case FieldOp::kMul:
      return field.mul(a, b);
    case FieldOp::kInv:
      return field.inv(a);
  }
  throw FieldError("unknown field operation");
}

}  // namespace readk

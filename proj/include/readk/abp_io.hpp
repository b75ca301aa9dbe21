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

#ifndef READK_ABP_IO_HPP_
#define READK_ABP_IO_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "readk/abp.hpp"

// Text format for oblivious ABPs (JSON):
//
//   {
//     "field_prime": 101,
//     "num_vars": 2,
//     "width": 2,          optional, defaults to the realized width
//     "degree": 1,         optional, defaults to the realized degree
//     "layers": [
//       {"var": 0, "matrix": [[[0, 1], [1]]]},
//       {"var": 1, "matrix": [[[1]], [[0, 1]]]},
//       {"var": null, "matrix": [[[3]]]}
//     ]
//   }
//
// Variables are 0-based. A matrix is a list of rows, a row a list of
// entries, an entry a coefficient list lowest degree first ([] is zero).
// Coefficients may be any integers and are reduced mod field_prime.
// "var": null marks a constant layer; "padding": true marks an identity
// layer added by normalization.
namespace readk {

class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& what, std::size_t line = 0,
              std::size_t column = 0)
      : std::runtime_error(what), line_(line), column_(column) {}
  // 1-based; 0 when the error is not tied to a text position.
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

ObliviousAbp parse_abp(std::string_view text);
ObliviousAbp load_abp(const std::string& path);
std::string serialize_abp(const ObliviousAbp& a);
void save_abp(const std::string& path, const ObliviousAbp& a);

}  // namespace readk

#endif  // READK_ABP_IO_HPP_

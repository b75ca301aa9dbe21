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

#ifndef READK_GRID_HPP_
#define READK_GRID_HPP_

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "readk/field.hpp"

namespace readk {

// Number of points in the box prod_v {0, ..., max[v]}, saturating.
inline std::size_t grid_size(std::span<const std::size_t> max) {
  std::size_t total = 1;
  for (std::size_t m : max) {
    if (total > std::numeric_limits<std::size_t>::max() / (m + 1)) {
      return std::numeric_limits<std::size_t>::max();
    }
    total *= m + 1;
  }
  return total;
}

// Advances `point` to the next box point in lexicographic order (first
// coordinate most significant). Returns false after the last point.
inline bool next_grid_point(std::vector<Elem>& point,
                            std::span<const std::size_t> max) {
  for (std::size_t v = point.size(); v-- > 0;) {
    if (point[v] < max[v]) {
      ++point[v];
      return true;
    }
    point[v] = 0;
  }
  return false;
}

}  // namespace readk

#endif  // READK_GRID_HPP_

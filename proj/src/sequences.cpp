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

#include "readk/sequences.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>

namespace readk {

ReadSequence ReadSequence::from_elements(std::span<const std::size_t> seq) {
  ReadSequence s;
  std::vector<std::size_t> counts;
  s.entries_.reserve(seq.size());
  for (std::size_t pos = 0; pos < seq.size(); ++pos) {
    const std::size_t e = seq[pos];
    auto [it, inserted] = s.rank_.try_emplace(e, s.first_order_.size());
    if (inserted) {
      s.first_order_.push_back(e);
      s.positions_.emplace_back();
      counts.push_back(0);
    }
    const std::size_t r = it->second;
    ++counts[r];
    s.positions_[r].push_back(pos);
    s.entries_.push_back({e, counts[r]});
  }
  if (!counts.empty()) {
    s.k_ = counts.front();
    for (std::size_t c : counts) {
      if (c != s.k_) {
        throw SequenceError(
            "sequence is not read-k: elements occur a different number of "
            "times");
      }
    }
  }
  return s;
}

std::size_t ReadSequence::rank(std::size_t element) const {
  auto it = rank_.find(element);
  if (it == rank_.end()) throw SequenceError("element not in sequence");
  return it->second;
}

std::size_t ReadSequence::occur(std::size_t occurrence,
                                std::size_t element) const {
  if (occurrence == 0 || occurrence > k_) {
    throw SequenceError("occurrence number out of range");
  }
  return positions_[rank(element)][occurrence - 1];
}

std::vector<std::size_t> ReadSequence::read(std::size_t i) const {
  std::vector<std::size_t> out;
  out.reserve(universe_size());
  for (const auto& e : entries_) {
    if (e.occurrence == i) out.push_back(e.element);
  }
  return out;
}

std::vector<std::size_t> ReadSequence::elements_in_order() const {
  std::vector<std::size_t> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.element);
  return out;
}

ReadSequence seq_project(const ReadSequence& s,
                         const std::set<std::size_t>& reads) {
  std::vector<std::size_t> kept;
  for (const auto& e : s.entries()) {
    if (reads.count(e.occurrence) != 0) kept.push_back(e.element);
  }
  return ReadSequence::from_elements(kept);
}

ReadSequence seq_restrict(const ReadSequence& s,
                          const std::set<std::size_t>& subset) {
  std::vector<std::size_t> kept;
  for (const auto& e : s.entries()) {
    if (subset.count(e.element) != 0) kept.push_back(e.element);
  }
  return ReadSequence::from_elements(kept);
}

namespace {

// Lexicographically smallest longest strictly increasing subsequence.
std::vector<std::size_t> lex_first_lis(std::span<const std::int64_t> a) {
  const std::size_t m = a.size();
  // from[i] = length of the longest increasing subsequence starting at i.
  std::vector<std::size_t> from(m, 0);
  // tails[l] = largest start value over increasing runs of length l+1 seen
  // so far (scanning right to left); strictly decreasing in l.
  std::vector<std::int64_t> tails;
  for (std::size_t i = m; i-- > 0;) {
    auto it = std::lower_bound(tails.begin(), tails.end(), a[i],
                               std::greater<std::int64_t>());
    // it points at the first tail <= a[i]; all before are > a[i].
    const std::size_t len = static_cast<std::size_t>(it - tails.begin()) + 1;
    from[i] = len;
    if (it == tails.end()) {
      tails.push_back(a[i]);
    } else {
      *it = std::max(*it, a[i]);
    }
  }
  std::size_t need = tails.size();
  std::vector<std::size_t> picked;
  picked.reserve(need);
  std::int64_t last = std::numeric_limits<std::int64_t>::min();
  bool have_last = false;
  for (std::size_t i = 0; i < m && need > 0; ++i) {
    if (from[i] == need && (!have_last || a[i] > last)) {
      picked.push_back(i);
      last = a[i];
      have_last = true;
      --need;
    }
  }
  return picked;
}

}  // namespace

MonotoneRun longest_monotone(std::span<const std::int64_t> values) {
  std::vector<std::int64_t> negated(values.begin(), values.end());
  for (auto& v : negated) v = -v;
  MonotoneRun inc{lex_first_lis(values), true};
  MonotoneRun dec{lex_first_lis(negated), false};
  return dec.indices.size() > inc.indices.size() ? dec : inc;
}

Direction read_direction(const ReadSequence& s, std::size_t i) {
  const auto r = s.read(i);
  if (r.size() < 2) return Direction::kIncreasing;
  bool inc = true;
  bool dec = true;
  for (std::size_t t = 1; t < r.size(); ++t) {
    const auto a = s.rank(r[t - 1]);
    const auto b = s.rank(r[t]);
    inc = inc && a < b;
    dec = dec && a > b;
  }
  if (inc) return Direction::kIncreasing;
  if (dec) return Direction::kDecreasing;
  return Direction::kNeither;
}

bool is_per_read_monotone(const ReadSequence& s) {
  for (std::size_t i = 1; i <= s.k(); ++i) {
    if (read_direction(s, i) == Direction::kNeither) return false;
  }
  return true;
}

std::vector<std::size_t> per_read_monotone_subset(const ReadSequence& s) {
  std::set<std::size_t> alive(s.first_order().begin(), s.first_order().end());
  for (std::size_t i = 2; i <= s.k(); ++i) {
    std::vector<std::size_t> order;
    std::vector<std::int64_t> ranks;
    for (std::size_t e : s.read(i)) {
      if (alive.count(e) == 0) continue;
      order.push_back(e);
      ranks.push_back(static_cast<std::int64_t>(s.rank(e)));
    }
    const MonotoneRun run = longest_monotone(ranks);
    alive.clear();
    for (std::size_t idx : run.indices) alive.insert(order[idx]);
  }
  std::vector<std::size_t> out;
  for (std::size_t e : s.first_order()) {
    if (alive.count(e) != 0) out.push_back(e);
  }
  return out;
}

std::optional<std::vector<std::vector<std::size_t>>> two_regular_blocks(
    const ReadSequence& s) {
  if (s.k() != 2 && s.universe_size() != 0) {
    throw SequenceError("two_regular_blocks expects a read-2 sequence");
  }
  std::vector<std::vector<std::size_t>> blocks;
  const auto& e = s.entries();
  std::size_t pos = 0;
  while (pos < e.size()) {
    std::set<std::size_t> block;
    std::vector<std::size_t> ordered;
    while (pos < e.size() && e[pos].occurrence == 1) {
      block.insert(e[pos].element);
      ordered.push_back(e[pos].element);
      ++pos;
    }
    if (block.empty()) return std::nullopt;
    for (std::size_t t = 0; t < ordered.size(); ++t, ++pos) {
      if (pos >= e.size() || e[pos].occurrence != 2 ||
          block.count(e[pos].element) == 0) {
        return std::nullopt;
      }
    }
    blocks.push_back(std::move(ordered));
  }
  return blocks;
}

RegularityWitness is_regularly_interleaving(const ReadSequence& s) {
  RegularityWitness w;
  w.regular = true;
  for (std::size_t i = 1; i <= s.k(); ++i) {
    for (std::size_t j = i + 1; j <= s.k(); ++j) {
      auto blocks = two_regular_blocks(seq_project(s, {i, j}));
      if (!blocks) {
        w.regular = false;
        w.pairs.clear();
        return w;
      }
      w.pairs.push_back({i, j, std::move(*blocks)});
    }
  }
  return w;
}

namespace {

struct Occ {
  std::size_t element;
  std::size_t occurrence;  // 1 or 2
};

// One step of the block-extraction recursion on a read-2 segment whose second
// reads are increasing. Appends kept elements to `kept`.
void extract_blocks(const std::vector<Occ>& seg,
                    const std::function<std::size_t(std::size_t)>& rank,
                    std::vector<std::size_t>& kept) {
  if (seg.empty()) return;
  std::map<std::size_t, std::pair<std::size_t, std::size_t>> pos;
  for (std::size_t p = 0; p < seg.size(); ++p) {
    auto& slot = pos[seg[p].element];
    (seg[p].occurrence == 1 ? slot.first : slot.second) = p;
  }
  // x: largest gap between the two occurrences; ties to the smallest rank.
  std::size_t x = 0;
  std::size_t gap = 0;
  bool found = false;
  for (const auto& [el, pr] : pos) {
    const std::size_t d = pr.second - pr.first;
    if (!found || d > gap || (d == gap && rank(el) < rank(x))) {
      x = el;
      gap = d;
      found = true;
    }
  }
  const std::size_t x1 = pos[x].first;
  const std::size_t x2 = pos[x].second;
  std::size_t firsts = 0;
  std::size_t seconds = 0;
  for (std::size_t p = x1; p <= x2; ++p) {
    (seg[p].occurrence == 1 ? firsts : seconds) += 1;
  }
  std::set<std::size_t> block;
  std::size_t lo = x1;
  std::size_t hi = x2;
  if (firsts >= seconds) {
    for (std::size_t p = x1; p <= x2; ++p) {
      if (seg[p].occurrence == 1) block.insert(seg[p].element);
    }
    for (std::size_t el : block) hi = std::max(hi, pos[el].second);
  } else {
    for (std::size_t p = x1; p <= x2; ++p) {
      if (seg[p].occurrence == 2) block.insert(seg[p].element);
    }
    for (std::size_t el : block) lo = std::min(lo, pos[el].first);
  }
  std::set<std::size_t> erased;
  for (std::size_t p = lo; p <= hi; ++p) {
    if (block.count(seg[p].element) == 0) erased.insert(seg[p].element);
  }
  std::vector<Occ> left;
  std::vector<Occ> right;
  for (std::size_t p = 0; p < lo; ++p) {
    if (erased.count(seg[p].element) == 0) left.push_back(seg[p]);
  }
  for (std::size_t p = hi + 1; p < seg.size(); ++p) {
    if (erased.count(seg[p].element) == 0) right.push_back(seg[p]);
  }
  extract_blocks(left, rank, kept);
  kept.insert(kept.end(), block.begin(), block.end());
  extract_blocks(right, rank, kept);
}

}  // namespace

std::vector<std::size_t> two_regular_subset(const ReadSequence& s) {
  if (s.universe_size() == 0) return {};
  if (s.k() != 2) {
    throw SequenceError("two_regular_subset expects a read-2 sequence");
  }
  if (!is_per_read_monotone(s)) {
    throw SequenceError("two_regular_subset expects a per-read-monotone input");
  }
  if (s.universe_size() == 1 ||
      read_direction(s, 2) == Direction::kDecreasing) {
    return s.first_order();
  }
  std::vector<Occ> seg;
  seg.reserve(s.length());
  for (const auto& e : s.entries()) seg.push_back({e.element, e.occurrence});
  std::vector<std::size_t> kept;
  extract_blocks(seg, [&](std::size_t el) { return s.rank(el); }, kept);
  std::sort(kept.begin(), kept.end(), [&](std::size_t a, std::size_t b) {
    return s.rank(a) < s.rank(b);
  });
  return kept;
}

std::vector<std::size_t> regularly_interleaving_subset(const ReadSequence& s) {
  if (!is_per_read_monotone(s)) {
    throw SequenceError(
        "regularly_interleaving_subset expects a per-read-monotone sequence");
  }
  std::set<std::size_t> alive(s.first_order().begin(), s.first_order().end());
  for (std::size_t i = 1; i <= s.k(); ++i) {
    for (std::size_t j = i + 1; j <= s.k(); ++j) {
      const ReadSequence pair = seq_project(seq_restrict(s, alive), {i, j});
      const auto kept = two_regular_subset(pair);
      alive = std::set<std::size_t>(kept.begin(), kept.end());
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t e : s.first_order()) {
    if (alive.count(e) != 0) out.push_back(e);
  }
  return out;
}

std::vector<Segment> concat_decompose(const ReadSequence& s) {
  std::vector<bool> increasing(s.k() + 1, true);
  for (std::size_t i = 1; i <= s.k(); ++i) {
    const Direction d = read_direction(s, i);
    if (d == Direction::kNeither) {
      throw SequenceError("concat_decompose expects a per-read-monotone input");
    }
    increasing[i] = d == Direction::kIncreasing;
  }
  std::vector<Segment> segments;
  const auto& e = s.entries();
  for (std::size_t p = 0; p < e.size(); ++p) {
    const bool inc = increasing[e[p].occurrence];
    if (segments.empty() || segments.back().increasing != inc) {
      segments.push_back({p, p, inc, {}});
    }
    Segment& seg = segments.back();
    seg.end = p + 1;
    if (std::find(seg.reads.begin(), seg.reads.end(), e[p].occurrence) ==
        seg.reads.end()) {
      seg.reads.push_back(e[p].occurrence);
    }
  }
  std::vector<std::size_t> owner(s.k() + 1, segments.size());
  for (std::size_t t = 0; t < segments.size(); ++t) {
    for (std::size_t r : segments[t].reads) {
      if (owner[r] != segments.size()) {
        throw SequenceError("a read spans two segments");
      }
      owner[r] = t;
    }
    std::sort(segments[t].reads.begin(), segments[t].reads.end());
  }
  return segments;
}

std::size_t interface_count(std::span<const std::size_t> reads,
                            const std::set<std::size_t>& prefix) {
  std::size_t runs = 0;
  bool inside = false;
  for (std::size_t e : reads) {
    const bool in = prefix.count(e) != 0;
    if (in && !inside) ++runs;
    inside = in;
  }
  return runs;
}

}  // namespace readk

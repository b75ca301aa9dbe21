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

#ifndef READK_SEQUENCES_HPP_
#define READK_SEQUENCES_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace readk {

class SequenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One read: the `occurrence`-th (1-based) occurrence of `element`.
struct ReadEntry {
  std::size_t element;
  std::size_t occurrence;
  bool operator==(const ReadEntry&) const = default;
};

// A read-k sequence: every element of the universe occurs exactly k times.
// Elements keep their external ids; the canonical order of the universe is
// the order of first occurrence (rank 0 is read first).
class ReadSequence {
 public:
  ReadSequence() = default;
  // Throws SequenceError unless all elements occur equally often.
  static ReadSequence from_elements(std::span<const std::size_t> seq);

  std::size_t k() const { return k_; }
  std::size_t universe_size() const { return first_order_.size(); }
  std::size_t length() const { return entries_.size(); }
  const std::vector<ReadEntry>& entries() const { return entries_; }
  // S^(1): elements in order of first occurrence.
  const std::vector<std::size_t>& first_order() const { return first_order_; }
  std::size_t rank(std::size_t element) const;
  bool contains(std::size_t element) const {
    return rank_.count(element) != 0;
  }
  // 0-based position of the occurrence-th (1-based) occurrence of element.
  std::size_t occur(std::size_t occurrence, std::size_t element) const;
  // S^(i) as element ids, i is 1-based.
  std::vector<std::size_t> read(std::size_t i) const;
  std::vector<std::size_t> elements_in_order() const;

  bool operator==(const ReadSequence& other) const {
    return entries_ == other.entries_;
  }

 private:
  std::vector<ReadEntry> entries_;
  std::size_t k_ = 0;
  std::vector<std::size_t> first_order_;
  std::unordered_map<std::size_t, std::size_t> rank_;
  // positions_[rank][occurrence - 1]
  std::vector<std::vector<std::size_t>> positions_;
};

// S^(reads): keeps the occurrences whose number is in `reads` (1-based),
// renumbered 1..|reads|.
ReadSequence seq_project(const ReadSequence& s,
                         const std::set<std::size_t>& reads);

// S|_{X'}: drops every element outside `subset`.
ReadSequence seq_restrict(const ReadSequence& s,
                          const std::set<std::size_t>& subset);

struct MonotoneRun {
  std::vector<std::size_t> indices;  // positions in the input
  bool increasing = true;
};

// A longest strictly monotone subsequence: the longer of the longest
// increasing and longest decreasing subsequences, preferring increasing on a
// tie, and among those the lexicographically smallest index set.
// O(m log m). Values must be distinct.
MonotoneRun longest_monotone(std::span<const std::int64_t> values);

enum class Direction { kIncreasing, kDecreasing, kNeither };

// Direction of S^(i) with respect to the first-occurrence order. Sequences
// over fewer than two elements count as increasing.
Direction read_direction(const ReadSequence& s, std::size_t i);

bool is_per_read_monotone(const ReadSequence& s);

// Subset X' (element ids, in first-occurrence order) such that S|_{X'} is
// per-read-monotone, obtained by pruning S^(2), ..., S^(k) in turn with
// longest_monotone. |X'| >= n^{1/2^{k-1}}.
std::vector<std::size_t> per_read_monotone_subset(const ReadSequence& s);

// Blocks witnessing that a read-2 sequence is 2-regularly-interleaving, in
// sequence order, or nullopt.
std::optional<std::vector<std::vector<std::size_t>>> two_regular_blocks(
    const ReadSequence& s);

struct PairBlocks {
  std::size_t first_read;
  std::size_t second_read;
  std::vector<std::vector<std::size_t>> blocks;
};

struct RegularityWitness {
  bool regular = false;
  std::vector<PairBlocks> pairs;  // one per pair (i < j) when regular
};

// True iff every projection S^(i,j) is 2-regularly-interleaving.
RegularityWitness is_regularly_interleaving(const ReadSequence& s);

// Element subset keeping a per-read-monotone read-2 sequence per-read-monotone
// and 2-regularly-interleaving, with |X'| >= s/3.
std::vector<std::size_t> two_regular_subset(const ReadSequence& s);

// Applies two_regular_subset to every projection S^(i,j), pairs in
// lexicographic order. Throws SequenceError if s is not per-read-monotone.
std::vector<std::size_t> regularly_interleaving_subset(const ReadSequence& s);

struct Segment {
  std::size_t begin = 0;  // positions [begin, end)
  std::size_t end = 0;
  bool increasing = true;
  std::vector<std::size_t> reads;  // 1-based read numbers inside
};

// Splits a per-read-monotone sequence into maximal runs of equally directed
// reads. Every read lies inside one segment and directions alternate,
// starting with increasing. Throws SequenceError on non-monotone input.
std::vector<Segment> concat_decompose(const ReadSequence& s);

// Number of maximal runs of entries whose element is in `prefix`, i.e. the
// number of constant blocks after fixing the prefix.
std::size_t interface_count(std::span<const std::size_t> reads,
                            const std::set<std::size_t>& prefix);

}  // namespace readk

#endif  // READK_SEQUENCES_HPP_

// Copyright 2026 The patstat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Brute-force occurrence counting.
//
// An occurrence is a (start position, block decomposition) pair: the factor
// starting at the position is cut into |p| nonempty blocks, and blocks of
// equal variables must agree under the chosen convention. Each valid
// decomposition corresponds to exactly one nonerasing morphism, so the
// counts equal the sums of t_i over distinct morphisms.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "patstat/words.hpp"

namespace patstat {

using BigCount = mpz_class;

enum class CountKind {
  Full,              // blocks of one variable are equal words
  Abelian,           // blocks of one variable are anagrams
  PartialMorphism,   // (position, morphism) pairs with h(p) compatible to the factor
  PartialCollapsed,  // a coordinate that is a hole in every block is counted once
};

/// Occurrence enumerator over one text. Reusable across start positions.
class OccurrenceCounter {
 public:
  OccurrenceCounter(std::span<const Symbol> text, int alphabet_size, const Pattern& p,
                    CountKind kind);

  /// All occurrences starting at `start`.
  BigCount count_from(std::size_t start);
  /// All occurrences anywhere in the text.
  BigCount count_all();
  /// Whether some occurrence spans exactly [start, last] for some start.
  bool any_ending_at(std::size_t last);

 private:
  bool place_block(std::size_t var, std::size_t pos, std::size_t len);
  void undo_block(std::size_t var);
  template <class Leaf>
  bool descend(std::size_t t, std::size_t pos, std::size_t limit, bool exact_end, Leaf& leaf);

  std::span<const Symbol> text_;
  int m_;
  const Pattern& p_;
  CountKind kind_;
  std::vector<std::size_t> len_;        // block length per variable, 0 while unassigned
  std::vector<std::size_t> placed_;     // blocks currently placed per variable
  std::vector<std::size_t> first_;      // start of the first block
  std::vector<std::vector<int>> hist_;  // abelian: letter counts of the first block
  std::vector<int> scratch_hist_;
  std::vector<std::vector<Symbol>> overlay_;    // partial: merged letters per coordinate
  std::vector<std::size_t> open_;               // partial: all-hole coordinates per variable
  std::vector<std::vector<std::size_t>> fills_;  // partial: coordinates filled by later blocks
  std::vector<std::size_t> fill_marks_;          // LIFO marks into fills_, one per later block
  std::vector<BigCount> m_pow_;
};

BigCount count_full(const Word& w, const Pattern& p);
BigCount count_abelian(const Word& w, const Pattern& p);
/// kind must be PartialMorphism or PartialCollapsed.
BigCount count_partial(const PartialWord& w, const Pattern& p, CountKind kind);
/// Dispatches on kind; Full and Abelian reject words containing holes.
BigCount count(const PartialWord& w, const Pattern& p, CountKind kind);

struct TotalOptions {
  std::uint64_t budget = 50'000'000;  // maximum number of words visited
  unsigned threads = 1;
};

/// Σ of the per-word count over every word of length n (Full/Abelian: m^n
/// words; partial kinds: (m+1)^n words, or C(n,h) m^{n-h} when h is given).
BigCount total_count(CountKind kind, std::size_t n, int m, const Pattern& p,
                     std::optional<std::size_t> holes = std::nullopt,
                     const TotalOptions& options = {});

/// Number of words total_count ranges over.
BigCount population(CountKind kind, std::size_t n, int m, std::optional<std::size_t> holes);

/// Exact mean; with strict, the mean over partial words with at least one
/// hole: (total over partial words - total over full words) / ((m+1)^n - m^n).
mpq_class mean_exact(CountKind kind, std::size_t n, int m, const Pattern& p,
                     std::optional<std::size_t> holes = std::nullopt, bool strict = false,
                     const TotalOptions& options = {});

bool is_partial(CountKind kind);

}  // namespace patstat

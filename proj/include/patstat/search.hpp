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

// Backtracking search for words that avoid a pattern.

#include <cstdint>
#include <functional>
#include <optional>
#include <variant>

#include "patstat/oracle.hpp"
#include "patstat/words.hpp"

namespace patstat {

struct SearchBudget {
  std::uint64_t max_nodes = 100'000'000;
  unsigned threads = 1;
  std::size_t split_depth = 4;  // prefixes of this length are handed to workers
};

enum class SearchStatus { Found, ExhaustedNoWitness, BudgetExceeded };

struct SearchOutcome {
  SearchStatus status = SearchStatus::ExhaustedNoWitness;
  std::optional<PartialWord> witness;  // set iff Found
  std::uint64_t nodes = 0;
};

/// Depth-first search for a word of the given length (with exactly `holes`
/// holes for partial kinds, or any number when absent) having zero
/// occurrences of p. With symmetry breaking only words in first-appearance
/// form are tried (letter t+1 is used only after letter t), which loses no
/// existence answers since counts are invariant under renaming letters. The
/// witness is the lexicographically least one in that order, the hole
/// sorting after every letter.
SearchOutcome find_avoiding(CountKind kind, const Pattern& p, int m, std::size_t length,
                            std::optional<std::size_t> holes = std::nullopt,
                            const SearchBudget& budget = {}, bool symmetry_breaking = true);

/// Visits every avoiding word of the given length in lexicographic order,
/// without symmetry breaking. Returns how many were visited; stops early
/// when the callback returns false.
std::uint64_t for_each_avoiding(CountKind kind, const Pattern& p, int m, std::size_t length,
                                std::optional<std::size_t> holes,
                                const std::function<bool(const PartialWord&)>& visit);

struct NotFoundBelow {
  std::size_t n_max;
  bool operator==(const NotFoundBelow&) const = default;
};

using RamseyLength = std::variant<std::size_t, NotFoundBelow>;

/// Smallest L <= n_max such that every word of length L over m letters
/// encounters p; NotFoundBelow when an avoiding word of length n_max exists.
/// Throws BudgetExceeded when the node budget runs out first.
RamseyLength exact_ramsey_length(CountKind kind, const Pattern& p, int m, std::size_t n_max,
                                 const SearchBudget& budget = {});

}  // namespace patstat

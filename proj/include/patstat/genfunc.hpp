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

// Occurrence-counting generating functions.
//
// [z^n] of each series is the total number of occurrences of p summed over
// all words of length n of the matching population:
//   Full     <-> CountKind::Full              (m^n words)
//   Partial  <-> CountKind::PartialCollapsed  ((m+1)^n partial words)
//   Abelian  <-> CountKind::Abelian           (m^n words)
// The bivariate series additionally marks holes with u.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "patstat/series.hpp"
#include "patstat/words.hpp"

namespace patstat {

enum class SeriesKind { Full, Partial, Abelian };

enum class MultinomialMode {
  Convolution,  // factorial-power convolution, O(m l^2)
  Enumerate,    // direct enumeration of compositions, exponential in m
};

/// M(l,m,k) = Σ_{i_1+...+i_m = l} multinomial(l; i_1..i_m)^k.
mpz_class multinomial_power_sum(std::uint64_t l, int m, std::uint64_t k,
                                MultinomialMode mode = MultinomialMode::Convolution);

/// M(0..max_l, m, k) in one pass.
std::vector<mpz_class> multinomial_power_sums(std::uint64_t max_l, int m, std::uint64_t k);

/// The simplified closed forms:
///   Full:    m^r z^k / (1-mz)^{2+s} · Π_{j>s} 1/(1 - m z^{k_j})
///   Partial: (m+1)^s z^k / (1-(m+1)z)^{2+s} · Π_{j>s} c_j/(1 - c_j z^{k_j}),
///            c_j = m 2^{k_j} - m + 1
///   Abelian: 1/(1-mz)^2 · Π_j Σ_{l>=1} M(l,m,k_j) z^{k_j l}
RationalSeries ogf_build(SeriesKind kind, const PatternSignature& sig, int m, std::size_t order);
inline RationalSeries ogf_build(SeriesKind kind, const Pattern& p, int m, std::size_t order) {
  return ogf_build(kind, p.signature(), m, order);
}

/// The same series assembled factor by factor from the combinatorial
/// construction (prefix, one block sequence per variable, suffix), without
/// the algebraic simplification. Used to cross-check ogf_build.
RationalSeries ogf_from_construction(SeriesKind kind, const PatternSignature& sig, int m,
                                     std::size_t order);

/// (m+u)^s z^k / [1-(m+u)z]^{2+s} · Π_{j>s} c_j(u) / (1 - c_j(u) z^{k_j}),
/// c_j(u) = m(1+u)^{k_j} - m u^{k_j} + u^{k_j}.
BivariateSeries ogf_bivariate(const PatternSignature& sig, int m, std::size_t order);
inline BivariateSeries ogf_bivariate(const Pattern& p, int m, std::size_t order) {
  return ogf_bivariate(p.signature(), m, order);
}

/// m 2^k - m + 1: the per-coordinate choices for a variable repeated k times
/// when each aligned column is all holes or one letter with some holes.
mpz_class partial_column_weight(int m, std::uint64_t k);

}  // namespace patstat

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

// Ramsey-length bounds: up-arrow arithmetic, Zimin upper bounds, and
// first-moment lower bounds (asymptotic and exact).

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "patstat/asymptotics.hpp"
#include "patstat/genfunc.hpp"
#include "patstat/oracle.hpp"
#include "patstat/words.hpp"

namespace patstat {

inline constexpr std::uint64_t kDefaultDigitCap = 1'000'000;

/// The value exceeded `cap_digits` decimal digits and was not materialized.
struct OverflowBeyond {
  std::uint64_t cap_digits;
  bool operator==(const OverflowBeyond&) const = default;
};

/// A positive real kept as its base-10 logarithm, so astronomically large
/// bounds stay representable.
struct Magnitude {
  double log10 = 0;
  double value() const;
  std::string to_string(int significant = 10) const;
};

using BoundValue = std::variant<mpz_class, Magnitude, OverflowBeyond>;

std::uint64_t decimal_digits(const mpz_class& z);

/// Strict comparison a < b where decidable: an exact value is below any
/// overflow marker whose cap is at least its digit count.
std::optional<bool> bound_less(const BoundValue& a, const BoundValue& b);

std::string to_string(const BoundValue& v);

/// x ↑↑ y (x^x^...^x, y copies; 1 for y = 0).
BoundValue double_uparrow(std::uint64_t x, std::uint64_t y, std::uint64_t cap = kDefaultDigitCap);

enum class ZiminUpperMode {
  Recursive,  // L_2 = 2m+1, L_{i} <= m^{L_{i-1}} (L_{i-1}+1) + L_{i-1}
  Tetration,  // m ↑↑ (2i-1)
};

BoundValue zimin_upper(int m, int i, ZiminUpperMode mode, std::uint64_t cap = kDefaultDigitCap);

/// [(s+1)! Π_{j>s} 1/F_j]^{1/(s+1)} with F_j the mean factor of the kind.
/// Below this length an avoiding word of the kind exists, up to the dropped
/// (1+o(1)) correction.
Magnitude avoidance_threshold(MeanKind kind, const PatternSignature& sig, int m,
                              std::optional<mpq_class> d = std::nullopt,
                              double eps = kDefaultAbelianTolerance);

/// Lower bound on the Ramsey length of Z_i: √(2 Π_{j=1}^{i-1} 1/F(2^j)).
Magnitude zimin_lower(MeanKind kind, int m, int i, std::optional<mpq_class> d = std::nullopt,
                      double eps = kDefaultAbelianTolerance);

enum class ExactThresholdKind { Full, Abelian, PartialCollapsed };

inline constexpr std::size_t kMaxExactThresholdLength = 2000;

/// Largest n <= n_max such that the exact mean occurrence count is < 1 for
/// every length 1..n; an avoiding object exists at each such length because
/// counts are integers. Zero if already the length-1 mean is >= 1.
std::size_t exact_avoidance_threshold(ExactThresholdKind kind, const Pattern& p, int m,
                                      std::size_t n_max);

}  // namespace patstat

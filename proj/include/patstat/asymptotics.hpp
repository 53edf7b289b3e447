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

// Leading-order asymptotic means.
//
// Every evaluator returns n^{s+1}/(s+1)! times a product over the repeated
// variables of a kind-specific factor. The (1+o(1)) correction is not
// modelled: these are leading terms only, not bounds.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "patstat/words.hpp"

namespace patstat {

enum class MeanKind { Full, Abelian, Partial, Strict, Density };

/// Bookkeeping for one truncated abelian constant.
struct AbelianConstant {
  std::uint64_t k = 0;
  double value = 0;          // Σ_{l <= terms} m^{-kl} M(l,m,k)
  int terms = 0;
  double tail_estimate = 0;  // integral bound on Σ_{l > terms} of the large-l asymptotic
  double last_term = 0;
};

struct AsymptoticMean {
  double value = 0;
  MeanKind kind = MeanKind::Full;
  PatternSignature signature;
  int m = 0;
  std::uint64_t n = 0;
  std::optional<mpq_class> d;
  std::vector<AbelianConstant> truncation;  // abelian only, one per repeated variable
  std::vector<std::string> warnings;
};

inline constexpr double kDefaultAbelianTolerance = 1e-9;
inline constexpr int kAbelianTermCap = 10000;

AsymptoticMean mean_asymptotic(MeanKind kind, const PatternSignature& sig, int m, std::uint64_t n,
                               std::optional<mpq_class> d = std::nullopt,
                               double eps = kDefaultAbelianTolerance);

/// Σ_{l>=1} m^{-kl} M(l,m,k), truncated once both the tail estimate and the
/// last included term are below eps relative to the partial sum.
/// Requires m >= 4, 2 <= k <= 256. Throws ToleranceFailure at the term cap.
AbelianConstant abelian_constant(int m, std::uint64_t k, double eps = kDefaultAbelianTolerance);

/// m^{-kl} M(l,m,k) for l = 0..max_l, from exact integers for small l and a
/// normalized floating recurrence beyond.
std::vector<double> abelian_terms(int m, std::uint64_t k, std::uint64_t max_l);

/// Same terms from the floating recurrence only.
std::vector<double> abelian_terms_float(int m, std::uint64_t k, std::uint64_t max_l);

/// m^{m/2} (4π)^{(1-m)/2}: the large-l constant of m^{-2l} M(l,m,2) ~ c l^{(1-m)/2}.
double abelian_tail_constant(int m);

double riemann_zeta(double s);

/// n^{s+1}/(s+1)! · Π_{j>s} m^{m/2}(4π)^{(1-m)/2} ζ((m-1)/2). Every repeated
/// variable must occur exactly twice; m >= 4.
double abelian_rs_approx_mean(const PatternSignature& sig, int m, std::uint64_t n);

/// Natural log of the per-variable mean factor for a variable repeated k
/// times (Full: 1/(m^{k-1}-1); Partial/Strict: c/((m+1)^k - c) with
/// c = m2^k-m+1; Density: N/(m^{k-1}-N) with N = [1+d(m-1)]^k - (1-1/m)(md)^k;
/// Abelian: the abelian constant).
double log_mean_factor(MeanKind kind, int m, std::uint64_t k, const std::optional<mpq_class>& d,
                       double eps = kDefaultAbelianTolerance);

/// Exact factor as a rational (not available for Abelian).
mpq_class exact_mean_factor(MeanKind kind, int m, std::uint64_t k,
                            const std::optional<mpq_class>& d);

/// Validates kind-specific preconditions shared with the threshold calculators.
void check_mean_preconditions(MeanKind kind, int m, const std::optional<mpq_class>& d);

}  // namespace patstat

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

#include <gtest/gtest.h>

#include <cmath>

#include "patstat/asymptotics.hpp"
#include "patstat/errors.hpp"
#include "patstat/genfunc.hpp"

using namespace patstat;

namespace {

PatternSignature S(const char* p) { return Pattern::parse(p).signature(); }

double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

// Σ_{n<N} n^{-s} plus the Euler-Maclaurin tail at N.
double zeta_by_summation(double s) {
  const int N = 1000;
  double sum = 0;
  for (int n = N - 1; n >= 1; --n) sum += std::pow(n, -s);
  const double x = N;
  sum += std::pow(x, 1 - s) / (s - 1) + 0.5 * std::pow(x, -s) + s / 12 * std::pow(x, -s - 1) -
         s * (s + 1) * (s + 2) / 720 * std::pow(x, -s - 3);
  return sum;
}

double exact_mean(SeriesKind kind, const char* p, int m, std::size_t n) {
  const auto f = ogf_build(kind, Pattern::parse(p), m, n);
  mpz_class pop;
  mpz_ui_pow_ui(pop.get_mpz_t(), static_cast<unsigned long>(kind == SeriesKind::Partial ? m + 1 : m), n);
  return mpq_class(f[n] / pop).get_d();
}

}  // namespace

TEST(MeanAsymptotic, IllustrationValues) {
  EXPECT_LT(rel(mean_asymptotic(MeanKind::Full, S("abacaba"), 12, 100).value, 0.26319), 5e-5);
  EXPECT_LT(rel(mean_asymptotic(MeanKind::Partial, S("abacaba"), 12, 100).value, 8.9384), 5e-5);
  // The published density value is truncated after three decimals.
  const double d = mean_asymptotic(MeanKind::Density, S("abacaba"), 12, 100, mpq_class(1, 10)).value;
  EXPECT_EQ(std::floor(d * 1000), 17788);
}

TEST(MeanAsymptotic, StrictEqualsPartial) {
  for (const char* p : {"aa", "aba", "abacaba", "aabbc"})
    for (int m : {2, 3, 12})
      EXPECT_EQ(mean_asymptotic(MeanKind::Strict, S(p), m, 50).value,
                mean_asymptotic(MeanKind::Partial, S(p), m, 50).value);
}

TEST(MeanAsymptotic, NoRepeatedVariable) {
  EXPECT_DOUBLE_EQ(mean_asymptotic(MeanKind::Full, S("ab"), 5, 100).value, 1e6 / 6);
  EXPECT_NEAR(mean_asymptotic(MeanKind::Abelian, S("abc"), 5, 10).value, 1e4 / 24, 1e-9);
}

TEST(MeanAsymptotic, MonotoneInN) {
  for (auto kind : {MeanKind::Full, MeanKind::Partial, MeanKind::Abelian}) {
    double prev = 0;
    for (std::uint64_t n = 1; n <= 200; n += 13) {
      const double v = mean_asymptotic(kind, S("aba"), 12, n).value;
      EXPECT_GT(v, prev);
      prev = v;
    }
  }
}

TEST(MeanAsymptotic, Preconditions) {
  EXPECT_THROW(mean_asymptotic(MeanKind::Full, S("aa"), 1, 10), DomainError);
  EXPECT_THROW(mean_asymptotic(MeanKind::Abelian, S("aa"), 3, 10), DomainError);
  EXPECT_THROW(mean_asymptotic(MeanKind::Density, S("aa"), 3, 10), DomainError);
  EXPECT_THROW(mean_asymptotic(MeanKind::Density, S("aa"), 3, 10, mpq_class(1)), DomainError);
  EXPECT_THROW(mean_asymptotic(MeanKind::Density, S("aa"), 3, 10, mpq_class(0)), DomainError);
  EXPECT_THROW(mean_asymptotic(MeanKind::Full, S("aa"), 3, 10, mpq_class(1, 2)), DomainError);
  EXPECT_NO_THROW(mean_asymptotic(MeanKind::Full, S("ab"), 1, 10));
}

TEST(MeanAsymptotic, DensityWarnsOnFractionalHoleCount) {
  const auto a = mean_asymptotic(MeanKind::Density, S("aba"), 3, 7, mpq_class(1, 2));
  EXPECT_FALSE(a.warnings.empty());
  const auto b = mean_asymptotic(MeanKind::Density, S("aba"), 3, 8, mpq_class(1, 2));
  EXPECT_TRUE(b.warnings.empty());
}

TEST(MeanAsymptotic, DensityTendsToFullAsHolesVanish) {
  const mpq_class tiny(1, 1'000'000'000);
  for (int m : {2, 3, 12})
    for (std::uint64_t k : {2u, 3u, 7u}) {
      const double density = exact_mean_factor(MeanKind::Density, m, k, tiny).get_d();
      const double full = exact_mean_factor(MeanKind::Full, m, k, std::nullopt).get_d();
      EXPECT_LT(rel(density, full), 1e-6);
    }
}

TEST(MeanAsymptotic, LogDomainAgreesWithExact) {
  for (auto kind : {MeanKind::Full, MeanKind::Partial})
    for (std::uint64_t k : {2u, 5u, 40u})
      EXPECT_NEAR(log_mean_factor(kind, 3, k, std::nullopt),
                  std::log(exact_mean_factor(kind, 3, k, std::nullopt).get_d()), 1e-12);
  // Very large multiplicities stay finite.
  const auto big = mean_asymptotic(MeanKind::Full, zimin_signature(40), 2, 1000);
  EXPECT_TRUE(std::isfinite(std::log(big.value)) || big.value == 0);
}

TEST(MeanAsymptotic, ConvergenceFullAndPartial) {
  const double full = exact_mean(SeriesKind::Full, "aba", 2, 400) /
                      mean_asymptotic(MeanKind::Full, S("aba"), 2, 400).value;
  EXPECT_NEAR(full, 1.0, 0.05);
  const double partial = exact_mean(SeriesKind::Partial, "aba", 2, 400) /
                         mean_asymptotic(MeanKind::Partial, S("aba"), 2, 400).value;
  EXPECT_NEAR(partial, 1.0, 0.05);
}

TEST(AbelianConstant, KnownValue) {
  const auto c = abelian_constant(12, 2, 1e-9);
  EXPECT_GE(c.value, 0.1011);
  EXPECT_LT(c.value, 0.1012);
  EXPECT_LT(c.tail_estimate, 1e-9 * c.value);
  EXPECT_LT(c.last_term, 1e-9 * c.value);
  EXPECT_LE(c.terms, kAbelianTermCap);
}

TEST(AbelianConstant, FirstTermAndMonotonicity) {
  const auto terms = abelian_terms(7, 3, 4);
  EXPECT_DOUBLE_EQ(terms[1], std::pow(7.0, -2));
  double prev = 1e300;
  for (std::uint64_t k = 2; k <= 6; ++k) {
    const double v = abelian_constant(12, k).value;
    EXPECT_LT(v, prev);
    prev = v;
  }
}

TEST(AbelianConstant, FloatTermsMatchExactTerms) {
  for (int m : {4, 5, 12})
    for (std::uint64_t k : {2u, 3u}) {
      const auto exact = abelian_terms(m, k, 200);
      const auto approx = abelian_terms_float(m, k, 200);
      for (std::size_t l = 1; l <= 200; ++l) EXPECT_LT(rel(approx[l], exact[l]), 1e-10) << m << " " << k << " " << l;
    }
}

TEST(AbelianConstant, Errors) {
  EXPECT_THROW(abelian_constant(3, 2), DomainError);
  EXPECT_THROW(abelian_constant(5, 1), DomainError);
  EXPECT_THROW(abelian_constant(5, 2, 0.0), DomainError);
  try {
    abelian_constant(4, 2, 1e-9);
    FAIL() << "expected the term cap to be hit";
  } catch (const ToleranceFailure& e) {
    EXPECT_GT(e.partial_sum(), 0.7);
    EXPECT_EQ(e.terms(), kAbelianTermCap);
  }
  EXPECT_NO_THROW(abelian_constant(4, 2, 1e-2));
}

TEST(Zeta, MatchesSummation) {
  for (double s : {2.0, 3.5, 5.5, 11.0 / 2, 9.0}) EXPECT_LT(rel(riemann_zeta(s), zeta_by_summation(s)), 1e-12) << s;
  EXPECT_NEAR(riemann_zeta(2), M_PI * M_PI / 6, 1e-14);
}

TEST(AbelianApprox, Illustration) {
  EXPECT_LT(rel(abelian_rs_approx_mean(S("aba"), 12, 100), 13778.87), 5e-3);
  EXPECT_DOUBLE_EQ(abelian_rs_approx_mean(S("ab"), 12, 100), 1e6 / 6);  // n^{s+1}/(s+1)!, s = 2
  const double ratio = abelian_rs_approx_mean(S("aba"), 12, 100) /
                       mean_asymptotic(MeanKind::Abelian, S("aba"), 12, 100).value;
  EXPECT_GT(ratio, 20);
  EXPECT_THROW(abelian_rs_approx_mean(S("abaa"), 12, 100), DomainError);
  EXPECT_THROW(abelian_rs_approx_mean(S("aba"), 3, 100), DomainError);
}

TEST(AbelianApprox, TailConstant) {
  EXPECT_NEAR(abelian_tail_constant(12), std::pow(12.0, 6) * std::pow(4 * M_PI, -5.5), 1e-9);
}

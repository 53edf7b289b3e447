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

#include "patstat/genfunc.hpp"

#include <map>

#include "patstat/errors.hpp"

namespace patstat {

namespace {

void check_alphabet(int m) {
  if (m < 1) throw DomainError("alphabet size m must be >= 1");
}

mpz_class ipow(long base, std::uint64_t e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), mpz_class(base).get_mpz_t(), e);
  return r;
}

// (A ⋆ B)(j) = Σ_i C(j,i)^k A(i) B(j-i): the product of two series in the
// basis z^j / (j!)^k, scaled back to integers.
std::vector<mpz_class> binomial_power_convolve(const std::vector<mpz_class>& a,
                                               const std::vector<mpz_class>& b,
                                               const std::vector<std::vector<mpz_class>>& binpow) {
  std::vector<mpz_class> r(a.size(), 0);
  for (std::size_t j = 0; j < a.size(); ++j) {
    for (std::size_t i = 0; i <= j; ++i) {
      if (sgn(a[i]) == 0 || sgn(b[j - i]) == 0) continue;
      r[j] += binpow[j][i] * a[i] * b[j - i];
    }
  }
  return r;
}

void enumerate_compositions(std::uint64_t remaining, int parts_left, const mpz_class& l_fact,
                            mpz_class denom, std::uint64_t k, mpz_class& sum) {
  if (parts_left == 1) {
    mpz_class f, term;
    mpz_fac_ui(f.get_mpz_t(), remaining);
    denom *= f;
    term = l_fact / denom;
    mpz_pow_ui(term.get_mpz_t(), term.get_mpz_t(), k);
    sum += term;
    return;
  }
  for (std::uint64_t i = 0; i <= remaining; ++i) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), i);
    enumerate_compositions(remaining - i, parts_left - 1, l_fact, denom * f, k, sum);
  }
}

RationalSeries geometric_denominator(const mpq_class& c, std::size_t power, std::size_t order) {
  // 1 / (1 - c z^power)
  RationalSeries d = RationalSeries::one(order) - RationalSeries::monomial(c, power, order);
  return d.reciprocal();
}

RationalSeries abelian_factor(const std::vector<mpz_class>& sums, std::uint64_t k,
                              std::size_t order) {
  RationalSeries f(order);
  for (std::size_t l = 1; l < sums.size(); ++l) {
    const std::uint64_t e = k * l;
    if (e > order) break;
    f[e] = mpq_class(sums[l]);
  }
  return f;
}

std::map<std::uint64_t, int> grouped(std::span<const std::uint64_t> mults) {
  std::map<std::uint64_t, int> g;
  for (auto k : mults) ++g[k];
  return g;
}

}  // namespace

std::vector<mpz_class> multinomial_power_sums(std::uint64_t max_l, int m, std::uint64_t k) {
  check_alphabet(m);
  if (k < 1) throw DomainError("multinomial power k must be >= 1");
  const std::size_t n = max_l + 1;
  std::vector<std::vector<mpz_class>> binpow(n);
  for (std::size_t j = 0; j < n; ++j) {
    binpow[j].resize(j + 1);
    for (std::size_t i = 0; i <= j; ++i) {
      mpz_bin_uiui(binpow[j][i].get_mpz_t(), j, i);
      mpz_pow_ui(binpow[j][i].get_mpz_t(), binpow[j][i].get_mpz_t(), k);
    }
  }
  // One part: every composition of j into a single part has multinomial 1.
  std::vector<mpz_class> base(n, 1);
  std::vector<mpz_class> result(n, 0);
  result[0] = 1;
  for (unsigned e = static_cast<unsigned>(m);;) {
    if (e & 1u) result = binomial_power_convolve(result, base, binpow);
    e >>= 1u;
    if (e == 0) break;
    base = binomial_power_convolve(base, base, binpow);
  }
  return result;
}

mpz_class multinomial_power_sum(std::uint64_t l, int m, std::uint64_t k, MultinomialMode mode) {
  check_alphabet(m);
  if (l < 1) throw DomainError("multinomial power sum needs l >= 1");
  if (k < 1) throw DomainError("multinomial power k must be >= 1");
  if (mode == MultinomialMode::Convolution) return multinomial_power_sums(l, m, k)[l];
  mpz_class l_fact, sum = 0;
  mpz_fac_ui(l_fact.get_mpz_t(), l);
  enumerate_compositions(l, m, l_fact, 1, k, sum);
  return sum;
}

mpz_class partial_column_weight(int m, std::uint64_t k) {
  return mpz_class(m) * ipow(2, k) - m + 1;
}

RationalSeries ogf_build(SeriesKind kind, const PatternSignature& sig, int m, std::size_t order) {
  check_alphabet(m);
  const std::uint64_t k = sig.length();
  if (k > order) return RationalSeries(order);
  const auto s = static_cast<unsigned>(sig.s);

  switch (kind) {
    case SeriesKind::Full: {
      RationalSeries f = geometric_denominator(m, 1, order).pow(2 + s) *
                         RationalSeries::monomial(mpq_class(ipow(m, sig.mults.size())), k, order);
      for (auto kj : sig.repeated()) f = f * geometric_denominator(m, kj, order);
      return f;
    }
    case SeriesKind::Partial: {
      RationalSeries f = geometric_denominator(m + 1, 1, order).pow(2 + s) *
                         RationalSeries::monomial(mpq_class(ipow(m + 1, s)), k, order);
      for (auto kj : sig.repeated()) {
        const mpq_class c(partial_column_weight(m, kj));
        f = f * geometric_denominator(c, kj, order) * c;
      }
      return f;
    }
    case SeriesKind::Abelian: {
      RationalSeries f = geometric_denominator(m, 1, order).pow(2);
      for (auto [kj, count] : grouped(sig.mults)) {
        const auto sums = multinomial_power_sums(order / kj, m, kj);
        f = f * abelian_factor(sums, kj, order).pow(static_cast<unsigned>(count));
      }
      return f;
    }
  }
  throw DomainError("unknown series kind");
}

RationalSeries ogf_from_construction(SeriesKind kind, const PatternSignature& sig, int m,
                                     std::size_t order) {
  check_alphabet(m);
  const RationalSeries one = RationalSeries::one(order);
  switch (kind) {
    case SeriesKind::Full: {
      // SEQ(A) x Π_j [(W \ {ε}) ∘ Z^{k_j}] x SEQ(A)
      RationalSeries f = geometric_denominator(m, 1, order).pow(2);
      for (auto kj : sig.mults) f = f * (geometric_denominator(m, kj, order) - one);
      return f;
    }
    case SeriesKind::Partial: {
      // Per coordinate of a k-fold block: all holes, or a letter with a
      // nonempty set of non-hole copies: z^k + m (2^k - 1) z^k.
      RationalSeries f = geometric_denominator(m + 1, 1, order).pow(2);
      for (auto kj : sig.mults) {
        RationalSeries column = RationalSeries::monomial(1, kj, order) +
                                RationalSeries::monomial(mpq_class(m * (ipow(2, kj) - 1)), kj, order);
        f = f * ((one - column).reciprocal() - one);
      }
      return f;
    }
    case SeriesKind::Abelian: {
      RationalSeries f = geometric_denominator(m, 1, order).pow(2);
      for (auto kj : sig.mults) {
        RationalSeries factor(order);
        for (std::uint64_t l = 1; kj * l <= order; ++l)
          factor[kj * l] = mpq_class(multinomial_power_sum(l, m, kj, MultinomialMode::Enumerate));
        f = f * factor;
      }
      return f;
    }
  }
  throw DomainError("unknown series kind");
}

BivariateSeries ogf_bivariate(const PatternSignature& sig, int m, std::size_t order) {
  check_alphabet(m);
  const std::uint64_t k = sig.length();
  if (k > order) return BivariateSeries(order);
  const auto s = static_cast<unsigned>(sig.s);
  const UPolynomial m_plus_u(std::vector<mpq_class>{m, 1});
  const UPolynomial u = UPolynomial::monomial(1, 1);
  const BivariateSeries one = BivariateSeries::one(order);

  BivariateSeries f = (one - BivariateSeries::monomial(m_plus_u, 1, order)).reciprocal().pow(2 + s) *
                      BivariateSeries::monomial(pow(m_plus_u, s), k, order);
  for (auto kj : sig.repeated()) {
    const auto e = static_cast<unsigned>(kj);
    const UPolynomial c = UPolynomial(mpq_class(m)) * pow(UPolynomial(1) + u, e) -
                          UPolynomial(mpq_class(m - 1)) * pow(u, e);
    f = f * (one - BivariateSeries::monomial(c, kj, order)).reciprocal() * c;
  }
  return f;
}

}  // namespace patstat

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

#include "patstat/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>

#include "patstat/errors.hpp"
#include "patstat/genfunc.hpp"

namespace patstat {

namespace {

// Multiplicities above this use log-domain approximations (relative error
// below m^{-k}, far under double precision).
constexpr std::uint64_t kExactMultiplicityLimit = 2048;

double log_abs(const mpz_class& z) {
  long e = 0;
  const double mant = mpz_get_d_2exp(&e, z.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(e) * std::numbers::ln2;
}

double log_of(const mpq_class& q) { return log_abs(q.get_num()) - log_abs(q.get_den()); }

mpq_class qpow(const mpq_class& base, std::uint64_t e) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  mpq_class r(num, den);
  r.canonicalize();
  return r;
}

[[noreturn]] void degenerate(MeanKind kind, int m, std::uint64_t k) {
  const char* name = kind == MeanKind::Full ? "full" : kind == MeanKind::Density ? "density" : "partial";
  throw DomainError(std::string(name) + " mean factor has a nonpositive denominator for m=" +
                    std::to_string(m) + ", k=" + std::to_string(k));
}

// log(e^x - 1) for x > 0.
double log_expm1(double x) { return x > 30 ? x + std::log1p(-std::exp(-x)) : std::log(std::expm1(x)); }

}  // namespace

void check_mean_preconditions(MeanKind kind, int m, const std::optional<mpq_class>& d) {
  if (m < 1) throw DomainError("alphabet size m must be >= 1");
  if (kind == MeanKind::Abelian && m < 4)
    throw DomainError("abelian asymptotics need an alphabet of m >= 4 letters");
  if (kind == MeanKind::Density) {
    if (!d) throw DomainError("density kind needs a hole density d");
    if (*d <= 0 || *d >= 1) throw DomainError("hole density d must lie strictly between 0 and 1");
  } else if (d) {
    throw DomainError("hole density d only applies to the density kind");
  }
}

mpq_class exact_mean_factor(MeanKind kind, int m, std::uint64_t k,
                            const std::optional<mpq_class>& d) {
  check_mean_preconditions(kind, m, d);
  if (k < 2) throw DomainError("mean factors are defined for repeated variables (k >= 2)");
  switch (kind) {
    case MeanKind::Full: {
      const mpq_class den = qpow(m, k - 1) - 1;
      if (den <= 0) degenerate(kind, m, k);
      return 1 / den;
    }
    case MeanKind::Partial:
    case MeanKind::Strict: {
      const mpq_class c(partial_column_weight(m, k));
      const mpq_class den = qpow(m + 1, k) - c;
      if (den <= 0) degenerate(kind, m, k);
      mpq_class r = c / den;
      return r;
    }
    case MeanKind::Density: {
      const mpq_class a = 1 + *d * (m - 1);
      const mpq_class b = *d * m;
      const mpq_class n = qpow(a, k) - mpq_class(m - 1, m) * qpow(b, k);
      const mpq_class den = qpow(m, k - 1) - n;
      if (den <= 0 || n <= 0) degenerate(kind, m, k);
      mpq_class r = n / den;
      return r;
    }
    case MeanKind::Abelian:
      break;
  }
  throw DomainError("the abelian factor has no exact closed form");
}

double log_mean_factor(MeanKind kind, int m, std::uint64_t k, const std::optional<mpq_class>& d,
                       double eps) {
  check_mean_preconditions(kind, m, d);
  if (kind == MeanKind::Abelian) return std::log(abelian_constant(m, k, eps).value);
  if (k <= kExactMultiplicityLimit) return log_of(exact_mean_factor(kind, m, k, d));

  const double kk = static_cast<double>(k);
  const double lm = std::log(static_cast<double>(m));
  switch (kind) {
    case MeanKind::Full:
      if (m == 1) degenerate(kind, m, k);
      return -log_expm1((kk - 1) * lm);
    case MeanKind::Partial:
    case MeanKind::Strict: {
      if (m == 1) degenerate(kind, m, k);
      // c = m 2^k (1 - (m-1)/(m 2^k)); (m+1)^k - c = (m+1)^k (1 - c/(m+1)^k)
      const double log_c = lm + kk * std::numbers::ln2;
      const double log_total = kk * std::log(m + 1.0);
      return log_c - log_total - std::log1p(-std::exp(log_c - log_total));
    }
    case MeanKind::Density: {
      const double dd = d->get_d();
      const double a = 1 + dd * (m - 1);
      const double b = dd * m;
      const double log_n = kk * std::log(a) + std::log1p(-(1 - 1.0 / m) * std::pow(b / a, kk));
      const double gap = (kk - 1) * lm - log_n;
      if (!(gap > 0)) degenerate(kind, m, k);
      // N / (m^{k-1} - N) = 1 / (e^{gap} - 1)
      return -log_expm1(gap);
    }
    case MeanKind::Abelian:
      break;
  }
  throw DomainError("unknown mean kind");
}

double abelian_tail_constant(int m) {
  return std::exp(0.5 * m * std::log(static_cast<double>(m)) +
                  0.5 * (1 - m) * std::log(4 * std::numbers::pi));
}

double riemann_zeta(double s) { return std::riemann_zeta(s); }

std::vector<double> abelian_terms_float(int m, std::uint64_t k, std::uint64_t max_l) {
  const std::size_t n = max_l + 1;
  const double kk = static_cast<double>(k);
  // q_t(j) = M(j,t,k) / t^{kj};  q_1 = 1.
  std::vector<double> q(n, 1.0), next(n);
  std::vector<double> lfact(n);
  for (std::size_t j = 0; j < n; ++j) lfact[j] = std::lgamma(static_cast<double>(j) + 1);
  constexpr double kCutoff = 1e-40;
  for (int t = 2; t <= m; ++t) {
    const double p = 1.0 / t;
    const double lp = std::log(p), lq = std::log1p(-p);
    for (std::size_t j = 0; j < n; ++j) {
      // Binomial(j, 1/t) weights raised to k, marched outward from the mode.
      const std::size_t mode = std::min(j, static_cast<std::size_t>(static_cast<double>(j + 1) * p));
      const double lw_mode = lfact[j] - lfact[mode] - lfact[j - mode] +
                             static_cast<double>(mode) * lp + static_cast<double>(j - mode) * lq;
      const double w_mode = std::exp(lw_mode);
      const double floor = kCutoff * std::pow(w_mode, kk);
      double acc = std::pow(w_mode, kk) * q[j - mode];
      double w = w_mode;
      for (std::size_t i = mode + 1; i <= j; ++i) {
        w *= static_cast<double>(j - i + 1) / static_cast<double>(i) * (p / (1 - p));
        const double wk = std::pow(w, kk);
        if (wk < floor) break;
        acc += wk * q[j - i];
      }
      w = w_mode;
      for (std::size_t i = mode; i-- > 0;) {
        w *= static_cast<double>(i + 1) / static_cast<double>(j - i) * ((1 - p) / p);
        const double wk = std::pow(w, kk);
        if (wk < floor) break;
        acc += wk * q[j - i];
      }
      next[j] = acc;
    }
    std::swap(q, next);
  }
  q[0] = 1.0;
  return q;
}

std::vector<double> abelian_terms(int m, std::uint64_t k, std::uint64_t max_l) {
  const std::uint64_t exact_limit = std::min<std::uint64_t>(
      max_l, std::min<std::uint64_t>(512, std::max<std::uint64_t>(8, 1024 / k)));
  std::vector<double> terms;
  if (exact_limit < max_l) {
    terms = abelian_terms_float(m, k, max_l);
  } else {
    terms.assign(max_l + 1, 0.0);
  }
  const auto sums = multinomial_power_sums(exact_limit, m, k);
  for (std::uint64_t l = 0; l <= exact_limit; ++l) {
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(m), k * l);
    terms[l] = mpq_class(sums[l], den).get_d();
  }
  return terms;
}

AbelianConstant abelian_constant(int m, std::uint64_t k, double eps) {
  if (m < 4) throw DomainError("abelian constant needs an alphabet of m >= 4 letters");
  if (k < 2) throw DomainError("abelian constant needs a repeated variable (k >= 2)");
  if (k > 256) throw DomainError("abelian constant supports multiplicities k <= 256");
  if (!(eps > 0)) throw DomainError("tolerance eps must be positive");

  const double c = abelian_tail_constant(m);
  const double expo = 0.5 * (3 - m);
  // Σ_{l > L} c l^{(1-m)/2} <= ∫_L^∞ c x^{(1-m)/2} dx
  auto tail = [&](double L) { return c * std::pow(L, expo) / (0.5 * (m - 3)); };

  double sum = 0;
  for (std::uint64_t L = 64;; L = std::min<std::uint64_t>(2 * L, kAbelianTermCap)) {
    const auto terms = abelian_terms(m, k, L);
    sum = 0;
    for (std::uint64_t l = 1; l <= L; ++l) {
      sum += terms[l];
      const double t = tail(static_cast<double>(l));
      if (t < eps * sum && terms[l] < eps * sum)
        return AbelianConstant{k, sum, static_cast<int>(l), t, terms[l]};
    }
    if (L == kAbelianTermCap) break;
  }
  std::ostringstream msg;
  msg << "abelian constant did not reach tolerance " << eps << " within " << kAbelianTermCap
      << " terms (m=" << m << ", k=" << k << "); try a larger --eps";
  throw ToleranceFailure(msg.str(), sum, kAbelianTermCap);
}

AsymptoticMean mean_asymptotic(MeanKind kind, const PatternSignature& sig, int m, std::uint64_t n,
                               std::optional<mpq_class> d, double eps) {
  check_mean_preconditions(kind, m, d);
  AsymptoticMean out;
  out.kind = kind;
  out.signature = sig;
  out.m = m;
  out.n = n;
  out.d = d;
  if (kind == MeanKind::Density) {
    const mpq_class holes = *d * mpq_class(static_cast<unsigned long>(n));
    if (holes.get_den() != 1)
      out.warnings.push_back("n*d = " + holes.get_str() + " is not an integer hole count");
  }

  const auto s1 = static_cast<unsigned long>(sig.s + 1);
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), s1);

  if (kind == MeanKind::Abelian) {
    std::map<std::uint64_t, AbelianConstant> cache;
    double log_prod = 0;
    for (auto k : sig.repeated()) {
      auto it = cache.find(k);
      if (it == cache.end()) it = cache.emplace(k, abelian_constant(m, k, eps)).first;
      out.truncation.push_back(it->second);
      log_prod += std::log(it->second.value);
    }
    out.value = std::exp(static_cast<double>(s1) * std::log(static_cast<double>(n)) -
                         log_abs(fact) + log_prod);
    if (n == 0) out.value = 0;
    return out;
  }

  const bool exact = std::ranges::all_of(sig.repeated(), [](auto k) { return k <= kExactMultiplicityLimit; });
  if (exact) {
    mpz_class npow;
    mpz_ui_pow_ui(npow.get_mpz_t(), n, s1);
    mpq_class value(npow, fact);
    value.canonicalize();
    for (auto k : sig.repeated()) value *= exact_mean_factor(kind, m, k, d);
    out.value = value.get_d();
    return out;
  }
  double log_value = static_cast<double>(s1) * std::log(static_cast<double>(n)) - log_abs(fact);
  for (auto k : sig.repeated()) log_value += log_mean_factor(kind, m, k, d, eps);
  out.value = n == 0 ? 0.0 : std::exp(log_value);
  return out;
}

double abelian_rs_approx_mean(const PatternSignature& sig, int m, std::uint64_t n) {
  if (m < 4) throw DomainError("the abelian approximation needs an alphabet of m >= 4 letters");
  for (auto k : sig.repeated()) {
    if (k != 2)
      throw DomainError("the abelian approximation is only instantiated for variables repeated exactly twice");
  }
  const auto s1 = static_cast<int>(sig.s + 1);
  const double factor = abelian_tail_constant(m) * riemann_zeta(0.5 * (m - 1));
  return std::pow(static_cast<double>(n), s1) / std::tgamma(s1 + 1.0) *
         std::pow(factor, static_cast<double>(sig.repeated().size()));
}

}  // namespace patstat

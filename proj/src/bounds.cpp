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

#include "patstat/bounds.hpp"

#include <cmath>
#include <sstream>

#include "patstat/errors.hpp"

namespace patstat {

namespace {

BigCount ten_pow(std::uint64_t e) {
  BigCount r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

// x^e if it has at most cap digits, else nullopt. e must be >= 0.
std::optional<mpz_class> capped_pow(std::uint64_t x, const mpz_class& e, std::uint64_t cap) {
  if (x <= 1 || e == 0) return mpz_class(e == 0 ? 1 : x);
  // digits(x^e) = floor(e log10 x) + 1; compare with a margin, then exactly.
  const double estimate = e.get_d() * std::log10(static_cast<double>(x));
  if (estimate > static_cast<double>(cap) + 1) return std::nullopt;
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), x, e.get_ui());
  if (decimal_digits(r) > cap) return std::nullopt;
  return r;
}

}  // namespace

std::uint64_t decimal_digits(const mpz_class& z) {
  if (z == 0) return 1;
  mpz_class a = abs(z);
  auto d = static_cast<std::uint64_t>(mpz_sizeinbase(a.get_mpz_t(), 10));
  // mpz_sizeinbase may overshoot by one.
  if (d > 1 && a < ten_pow(d - 1)) --d;
  return d;
}

double Magnitude::value() const { return std::pow(10.0, log10); }

std::string Magnitude::to_string(int significant) const {
  std::ostringstream os;
  os.precision(significant);
  if (std::fabs(log10) < 300) {
    os << value();
  } else {
    const double e = std::floor(log10);
    os << std::pow(10.0, log10 - e) << "e+" << static_cast<long long>(e);
  }
  return os.str();
}

std::optional<bool> bound_less(const BoundValue& a, const BoundValue& b) {
  if (auto* x = std::get_if<mpz_class>(&a)) {
    if (auto* y = std::get_if<mpz_class>(&b)) return *x < *y;
    if (auto* o = std::get_if<OverflowBeyond>(&b)) {
      if (decimal_digits(*x) <= o->cap_digits) return true;
      return std::nullopt;
    }
    const double lx = x->get_d() > 0 ? std::log10(x->get_d()) : -INFINITY;
    return lx < std::get<Magnitude>(b).log10;
  }
  if (std::holds_alternative<OverflowBeyond>(a)) {
    if (auto* y = std::get_if<mpz_class>(&b)) {
      if (decimal_digits(*y) <= std::get<OverflowBeyond>(a).cap_digits) return false;
    }
    return std::nullopt;
  }
  const double la = std::get<Magnitude>(a).log10;
  if (auto* y = std::get_if<mpz_class>(&b)) return la < std::log10(y->get_d());
  if (auto* m = std::get_if<Magnitude>(&b)) return la < m->log10;
  return std::nullopt;
}

std::string to_string(const BoundValue& v) {
  if (auto* x = std::get_if<mpz_class>(&v)) return x->get_str();
  if (auto* m = std::get_if<Magnitude>(&v)) return m->to_string();
  return "overflow(>" + std::to_string(std::get<OverflowBeyond>(v).cap_digits) + " digits)";
}

BoundValue double_uparrow(std::uint64_t x, std::uint64_t y, std::uint64_t cap) {
  if (x < 1) throw DomainError("up-arrow base x must be >= 1");
  mpz_class v = 1;
  for (std::uint64_t step = 0; step < y; ++step) {
    auto next = capped_pow(x, v, cap);
    if (!next) return OverflowBeyond{cap};
    v = std::move(*next);
    if (x == 1) break;
  }
  return v;
}

BoundValue zimin_upper(int m, int i, ZiminUpperMode mode, std::uint64_t cap) {
  if (m < 2) throw DomainError("Zimin upper bounds need m >= 2");
  if (i < 2) throw DomainError("Zimin upper bounds need i >= 2 (the base case is Z_2)");
  if (mode == ZiminUpperMode::Tetration)
    return double_uparrow(static_cast<std::uint64_t>(m), static_cast<std::uint64_t>(2 * i - 1), cap);

  mpz_class bound = 2 * m + 1;
  for (int j = 3; j <= i; ++j) {
    auto power = capped_pow(static_cast<std::uint64_t>(m), bound, cap);
    if (!power) return OverflowBeyond{cap};
    bound = *power * (bound + 1) + bound;
    if (decimal_digits(bound) > cap) return OverflowBeyond{cap};
  }
  return bound;
}

Magnitude avoidance_threshold(MeanKind kind, const PatternSignature& sig, int m,
                              std::optional<mpq_class> d, double eps) {
  check_mean_preconditions(kind, m, d);
  const double s1 = sig.s + 1.0;
  double log_b = std::lgamma(s1 + 1.0);
  for (auto k : sig.repeated()) log_b -= log_mean_factor(kind, m, k, d, eps);
  return Magnitude{log_b / s1 / std::log(10.0)};
}

Magnitude zimin_lower(MeanKind kind, int m, int i, std::optional<mpq_class> d, double eps) {
  if (i < 2) throw DomainError("Zimin lower bounds need i >= 2");
  if (kind != MeanKind::Full && kind != MeanKind::Abelian && kind != MeanKind::Density)
    throw DomainError("Zimin lower bounds are available for full, abelian and density kinds");
  return avoidance_threshold(kind, zimin_signature(i), m, d, eps);
}

std::size_t exact_avoidance_threshold(ExactThresholdKind kind, const Pattern& p, int m,
                                      std::size_t n_max) {
  if (m < 1) throw DomainError("alphabet size m must be >= 1");
  if (n_max > kMaxExactThresholdLength)
    throw BudgetExceeded("exact thresholds are limited to n_max <= " +
                         std::to_string(kMaxExactThresholdLength));
  const SeriesKind sk = kind == ExactThresholdKind::Full      ? SeriesKind::Full
                        : kind == ExactThresholdKind::Abelian ? SeriesKind::Abelian
                                                              : SeriesKind::Partial;
  const unsigned long base =
      static_cast<unsigned long>(m) + (kind == ExactThresholdKind::PartialCollapsed ? 1 : 0);
  const RationalSeries f = ogf_build(sk, p, m, n_max);
  mpz_class pop = 1;
  for (std::size_t n = 1; n <= n_max; ++n) {
    pop *= base;
    if (f[n] >= pop) return n - 1;
  }
  return n_max;
}

}  // namespace patstat

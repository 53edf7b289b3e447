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

// Truncated power series with exact coefficients.
//
// TruncatedSeries<Coeff> stores c_0..c_N. Every arithmetic result has order
// min(order of operands); nothing beyond the order is ever inspected.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "patstat/errors.hpp"

namespace patstat {

/// Polynomial in the hole-marking variable u with rational coefficients.
/// Trailing zero coefficients are always trimmed, so zero has no terms.
class UPolynomial {
 public:
  UPolynomial() = default;
  UPolynomial(const mpq_class& constant);  // NOLINT: constants embed
  UPolynomial(long constant) : UPolynomial(mpq_class(constant)) {}  // NOLINT
  explicit UPolynomial(std::vector<mpq_class> coeffs);

  /// a * u^power
  static UPolynomial monomial(const mpq_class& a, std::size_t power);

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  /// Coefficient of u^h (zero beyond the degree).
  mpq_class operator[](std::size_t h) const { return h < c_.size() ? c_[h] : mpq_class(0); }
  const std::vector<mpq_class>& coefficients() const { return c_; }

  mpq_class evaluate(const mpq_class& u) const;

  UPolynomial& operator+=(const UPolynomial& o);
  UPolynomial& operator-=(const UPolynomial& o);
  UPolynomial& operator*=(const UPolynomial& o);
  friend UPolynomial operator+(UPolynomial a, const UPolynomial& b) { return a += b; }
  friend UPolynomial operator-(UPolynomial a, const UPolynomial& b) { return a -= b; }
  friend UPolynomial operator*(const UPolynomial& a, const UPolynomial& b) {
    UPolynomial r = a;
    return r *= b;
  }
  friend UPolynomial operator-(UPolynomial a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  bool operator==(const UPolynomial& o) const { return c_ == o.c_; }

  std::string to_string() const;

 private:
  void trim();
  std::vector<mpq_class> c_;
};

UPolynomial pow(const UPolynomial& base, unsigned exponent);

// Ring hooks used by the series template.
inline bool is_zero(const mpq_class& x) { return sgn(x) == 0; }
inline bool is_zero(const UPolynomial& x) { return x.is_zero(); }
mpq_class ring_inverse(const mpq_class& x);
/// Only nonzero constants are units of Q[u].
UPolynomial ring_inverse(const UPolynomial& x);

template <class Coeff>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order) : c_(order + 1, Coeff(0)) {}

  /// a * z^power, truncated to `order`.
  static TruncatedSeries monomial(const Coeff& a, std::size_t power, std::size_t order) {
    TruncatedSeries s(order);
    if (power <= order) s.c_[power] = a;
    return s;
  }
  static TruncatedSeries one(std::size_t order) { return monomial(Coeff(1), 0, order); }

  std::size_t order() const { return c_.size() - 1; }
  const Coeff& operator[](std::size_t n) const { return c_[n]; }
  Coeff& operator[](std::size_t n) { return c_[n]; }

  /// Bounds-checked coefficient access.
  const Coeff& coeff(std::size_t n) const {
    if (n > order())
      throw DomainError("coefficient index " + std::to_string(n) + " beyond truncation order " +
                        std::to_string(order()));
    return c_[n];
  }

  TruncatedSeries truncated(std::size_t order) const {
    TruncatedSeries s(std::min(order, this->order()));
    std::copy_n(c_.begin(), s.c_.size(), s.c_.begin());
    return s;
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    c_.resize(std::min(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    c_.resize(std::min(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  TruncatedSeries& operator*=(const Coeff& a) {
    for (auto& x : c_) x *= a;
    return *this;
  }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const Coeff& b) { return a *= b; }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    const std::size_t n = std::min(a.order(), b.order());
    TruncatedSeries r(n);
    for (std::size_t i = 0; i <= n; ++i) {
      if (is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; i + j <= n; ++j) {
        if (is_zero(b.c_[j])) continue;
        r.c_[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return r;
  }

  /// R with S * R = 1 up to the order. The constant term must be a unit.
  TruncatedSeries reciprocal() const {
    if (is_zero(c_[0])) throw DomainError("reciprocal of a series with zero constant term");
    const Coeff inv0 = ring_inverse(c_[0]);
    TruncatedSeries r(order());
    r.c_[0] = inv0;
    for (std::size_t n = 1; n <= order(); ++n) {
      Coeff acc(0);
      for (std::size_t i = 1; i <= n; ++i) {
        if (is_zero(c_[i])) continue;
        acc += c_[i] * r.c_[n - i];
      }
      r.c_[n] = -(acc * inv0);
    }
    return r;
  }

  TruncatedSeries pow(unsigned exponent) const {
    TruncatedSeries result = one(order());
    TruncatedSeries base = *this;
    while (exponent != 0) {
      if (exponent & 1u) result = result * base;
      exponent >>= 1u;
      if (exponent != 0) base = base * base;
    }
    return result;
  }

  bool operator==(const TruncatedSeries& o) const { return c_ == o.c_; }

 private:
  std::vector<Coeff> c_;
};

using RationalSeries = TruncatedSeries<mpq_class>;
using BivariateSeries = TruncatedSeries<UPolynomial>;

/// Coefficient of z^n u^h.
mpq_class coeff(const BivariateSeries& s, std::size_t n, std::size_t h);
/// Coefficient of z^n.
inline const mpq_class& coeff(const RationalSeries& s, std::size_t n) { return s.coeff(n); }

/// The univariate series obtained by substituting u = value.
RationalSeries specialize(const BivariateSeries& s, const mpq_class& value);

}  // namespace patstat

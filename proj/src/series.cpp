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

#include "patstat/series.hpp"

#include <sstream>

namespace patstat {

UPolynomial::UPolynomial(const mpq_class& constant) : c_{constant} { trim(); }

UPolynomial::UPolynomial(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

UPolynomial UPolynomial::monomial(const mpq_class& a, std::size_t power) {
  std::vector<mpq_class> c(power + 1, mpq_class(0));
  c[power] = a;
  return UPolynomial(std::move(c));
}

void UPolynomial::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

mpq_class UPolynomial::evaluate(const mpq_class& u) const {
  mpq_class acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * u + *it;
  return acc;
}

UPolynomial& UPolynomial::operator+=(const UPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpq_class(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPolynomial& UPolynomial::operator-=(const UPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpq_class(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPolynomial& UPolynomial::operator*=(const UPolynomial& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<mpq_class> r(c_.size() + o.c_.size() - 1, mpq_class(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

std::string UPolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t h = 0; h < c_.size(); ++h) {
    if (sgn(c_[h]) == 0) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[h];
    if (h > 0) os << "*u^" << h;
  }
  return os.str();
}

UPolynomial pow(const UPolynomial& base, unsigned exponent) {
  UPolynomial result(1);
  UPolynomial b = base;
  while (exponent != 0) {
    if (exponent & 1u) result *= b;
    exponent >>= 1u;
    if (exponent != 0) b *= b;
  }
  return result;
}

mpq_class ring_inverse(const mpq_class& x) {
  if (sgn(x) == 0) throw DomainError("division by zero");
  return 1 / x;
}

UPolynomial ring_inverse(const UPolynomial& x) {
  if (x.degree() != 0) throw DomainError("only nonzero constant polynomials are invertible");
  return UPolynomial(mpq_class(1 / x[0]));
}

mpq_class coeff(const BivariateSeries& s, std::size_t n, std::size_t h) {
  if (h > n) throw DomainError("hole count exceeds length in coefficient extraction");
  return s.coeff(n)[h];
}

RationalSeries specialize(const BivariateSeries& s, const mpq_class& value) {
  RationalSeries r(s.order());
  for (std::size_t n = 0; n <= s.order(); ++n) r[n] = s[n].evaluate(value);
  return r;
}

}  // namespace patstat

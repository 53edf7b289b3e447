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

#include <stdexcept>
#include <string>

namespace patstat {

/// A precondition of an operation was violated (bad pattern, alphabet, range).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An enumeration or search needed more work than its budget allows.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A truncated summation hit its term cap before reaching the tolerance.
class ToleranceFailure : public std::runtime_error {
 public:
  ToleranceFailure(const std::string& what, double partial_sum, int terms)
      : std::runtime_error(what), partial_sum_(partial_sum), terms_(terms) {}

  double partial_sum() const noexcept { return partial_sum_; }
  int terms() const noexcept { return terms_; }

 private:
  double partial_sum_;
  int terms_;
};

}  // namespace patstat

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

// Acceptance checks. Each check prints one PASS/FAIL line; pass check
// numbers as arguments to run a subset.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "patstat/asymptotics.hpp"
#include "patstat/bounds.hpp"
#include "patstat/errors.hpp"
#include "patstat/genfunc.hpp"
#include "patstat/oracle.hpp"
#include "patstat/search.hpp"

using namespace patstat;

namespace {

Pattern P(const char* s) { return Pattern::parse(s); }

const std::vector<const char*> kCorpus{"a", "aa", "ab", "aba", "aab", "abab", "abba"};

struct Check {
  bool ok = true;
  std::ostringstream detail;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << "\n    mismatch: " << what;
    }
  }
};

std::size_t grid_max_n(int m) { return m <= 2 ? 8 : 6; }

void oracle_golden(Check& c) {
  const auto n = count_full(Word::parse("11111111", 2), P("aba"));
  c.expect(n == 34, "count_full(11111111, aba) = " + n.get_str());
  c.expect(count_full(Word::parse("tennessee", 26), P("abaca")) > 0, "tennessee encounters abaca");
  c.expect(count_abelian(Word::parse("valhalla", 26), P("abaa")) > 0, "valhalla encounters abaa (abelian)");
  c.expect(count_partial(PartialWord::parse("velve\xE2\x8B\x84ta", 26), P("abab"), CountKind::PartialMorphism) > 0,
           "velve<hole>ta encounters abab");
  c.detail << " count=" << n;
}

void ogf_grid(Check& c) {
  const std::pair<SeriesKind, CountKind> kinds[] = {{SeriesKind::Full, CountKind::Full},
                                                    {SeriesKind::Partial, CountKind::PartialCollapsed},
                                                    {SeriesKind::Abelian, CountKind::Abelian}};
  int cells = 0;
  for (auto [sk, ck] : kinds)
    for (const char* p : kCorpus)
      for (int m = 1; m <= 3; ++m) {
        const std::size_t N = grid_max_n(m);
        const auto f = ogf_build(sk, P(p), m, N);
        for (std::size_t n = 1; n <= N; ++n, ++cells) {
          const auto t = total_count(ck, n, m, P(p));
          if (coeff(f, n) != t)
            c.expect(false, std::string(p) + " m=" + std::to_string(m) + " n=" + std::to_string(n) + ": " +
                                coeff(f, n).get_str() + " vs " + t.get_str());
        }
      }
  c.detail << " " << cells << " coefficients compared";
}

void bivariate(Check& c) {
  int cells = 0;
  for (const char* p : {"aa", "aba"}) {
    const auto b = ogf_bivariate(P(p), 2, 6);
    const auto uni = ogf_build(SeriesKind::Partial, P(p), 2, 6);
    for (std::size_t n = 1; n <= 6; ++n) {
      mpq_class marginal = 0;
      for (std::size_t h = 0; h <= n; ++h, ++cells) {
        const auto t = total_count(CountKind::PartialCollapsed, n, 2, P(p), h);
        c.expect(coeff(b, n, h) == t, std::string(p) + " n=" + std::to_string(n) + " h=" + std::to_string(h));
        marginal += coeff(b, n, h);
      }
      c.expect(marginal == coeff(uni, n), std::string(p) + " marginal n=" + std::to_string(n));
      c.expect(b[n].evaluate(1) == coeff(uni, n), std::string(p) + " u=1 n=" + std::to_string(n));
    }
  }
  c.detail << " " << cells << " coefficients compared";
}

void strict_split(Check& c) {
  int cells = 0;
  for (const char* p : kCorpus)
    for (int m = 1; m <= 3; ++m) {
      const std::size_t N = grid_max_n(m);
      const auto part = ogf_build(SeriesKind::Partial, P(p), m, N);
      const auto full = ogf_build(SeriesKind::Full, P(p), m, N);
      for (std::size_t n = 1; n <= N; ++n, ++cells) {
        BigCount strict = 0;
        for (std::size_t h = 1; h <= n; ++h) strict += total_count(CountKind::PartialCollapsed, n, m, P(p), h);
        c.expect(coeff(part, n) - coeff(full, n) == strict,
                 std::string(p) + " m=" + std::to_string(m) + " n=" + std::to_string(n));
      }
    }
  c.detail << " " << cells << " lengths compared";
}

void illustrations(Check& c) {
  for (const auto& l : patstat::cli::reproduce_lines()) {
    if (l.ref_text.empty() || l.tolerance == 0) continue;
    const double rel = std::fabs(l.computed - l.ref) / std::fabs(l.ref);
    char buf[256];
    std::snprintf(buf, sizeof buf, "\n    %-4s %-52s published %-9s computed %.10g rel %.3g tol %g%s",
                  l.pass ? "ok" : "FAIL", l.label.c_str(), l.ref_text.c_str(), l.computed, rel, l.tolerance,
                  l.truncation_match ? " (agrees after truncation)" : "");
    c.detail << buf;
    if (!l.pass) c.ok = false;
  }
}

double ratio_exact_over_asymptotic(SeriesKind sk, MeanKind mk, int m, std::size_t n, double eps) {
  const auto f = ogf_build(sk, P("aba"), m, n);
  mpz_class pop;
  mpz_ui_pow_ui(pop.get_mpz_t(), static_cast<unsigned long>(sk == SeriesKind::Partial ? m + 1 : m), n);
  const double exact = mpq_class(f[n] / pop).get_d();
  return exact / mean_asymptotic(mk, P("aba").signature(), m, n, std::nullopt, eps).value;
}

void convergence(Check& c) {
  struct Case {
    const char* name;
    SeriesKind sk;
    MeanKind mk;
    int m;
    std::size_t n;
    double eps;
  };
  // The default abelian tolerance cannot be met within the term cap at m=4;
  // 1e-2 bounds the truncation error well inside the 5% budget.
  const Case cases[] = {{"full", SeriesKind::Full, MeanKind::Full, 2, 400, kDefaultAbelianTolerance},
                        {"partial", SeriesKind::Partial, MeanKind::Partial, 2, 400, kDefaultAbelianTolerance},
                        {"abelian", SeriesKind::Abelian, MeanKind::Abelian, 4, 60, 1e-2}};
  for (const auto& k : cases) {
    const double r = ratio_exact_over_asymptotic(k.sk, k.mk, k.m, k.n, k.eps);
    const bool ok = std::fabs(r - 1) <= 0.05;
    char buf[160];
    std::snprintf(buf, sizeof buf, "\n    %-4s %-8s aba m=%d n=%zu exact/asymptotic = %.4f", ok ? "ok" : "FAIL",
                  k.name, k.m, k.n, r);
    c.detail << buf;
    c.ok = c.ok && ok;
  }
}

void ramsey(Check& c) {
  for (int m : {2, 3}) {
    const auto L = exact_ramsey_length(CountKind::Full, P("aba"), m, 4 * m);
    const bool ok = std::holds_alternative<std::size_t>(L) && std::get<std::size_t>(L) == std::size_t(2 * m + 1);
    c.expect(ok, "L(" + std::to_string(m) + ", aba) != 2m+1");
    if (ok) c.detail << " L(" << m << ")=" << std::get<std::size_t>(L);
  }
  const auto four = find_avoiding(CountKind::Full, P("aba"), 2, 4);
  c.expect(four.status == SearchStatus::Found, "no binary aba-avoiding word of length 4");
  c.expect(find_avoiding(CountKind::Full, P("aba"), 2, 5).status == SearchStatus::ExhaustedNoWitness,
           "length 5 not exhausted");
  if (four.witness) c.detail << " witness(4)=" << four.witness->to_string();
}

void bounds(Check& c) {
  const auto up = double_uparrow(3, 3);
  c.expect(std::holds_alternative<mpz_class>(up) && std::get<mpz_class>(up) == mpz_class("7625597484987"),
           "3^^3 = " + to_string(up));
  const auto z = zimin_upper(2, 3, ZiminUpperMode::Recursive);
  c.expect(std::holds_alternative<mpz_class>(z) && std::get<mpz_class>(z) == 197, "recursive bound = " + to_string(z));
  for (int m = 2; m <= 4; ++m)
    for (int i = 2; i <= 3; ++i) {
      const auto less = bound_less(zimin_upper(m, i, ZiminUpperMode::Recursive),
                                   zimin_upper(m, i, ZiminUpperMode::Tetration));
      c.expect(less.value_or(false), "recursive < tetration at m=" + std::to_string(m) + " i=" + std::to_string(i));
    }
  for (int m = 2; m <= 64; ++m)
    for (unsigned long k = 2; k <= 64; ++k) {
      mpz_class rhs;
      mpz_ui_pow_ui(rhs.get_mpz_t(), static_cast<unsigned long>(m + 1), k);
      c.expect(partial_column_weight(m, k) < rhs, "column weight bound at m=" + std::to_string(m));
    }
}

void first_moment(Check& c) {
  for (const char* p : {"aa", "aba", "aab"})
    for (int m : {2, 3}) {
      const std::size_t t = exact_avoidance_threshold(ExactThresholdKind::Full, P(p), m, 10);
      for (std::size_t n = 1; n <= t; ++n)
        c.expect(find_avoiding(CountKind::Full, P(p), m, n).status == SearchStatus::Found,
                 std::string(p) + " m=" + std::to_string(m) + " n=" + std::to_string(n));
      c.detail << " " << p << "/m" << m << ":" << t;
    }
}

struct Criterion {
  const char* name;
  std::function<void(Check&)> run;
};

const std::vector<Criterion> kCriteria{
    {"oracle golden values", oracle_golden},
    {"generating functions equal brute-force totals", ogf_grid},
    {"bivariate coefficients equal hole-resolved totals", bivariate},
    {"partial minus full equals strictly partial total", strict_split},
    {"published illustrations", illustrations},
    {"exact means converge to asymptotic means", convergence},
    {"exact Ramsey lengths of aba", ramsey},
    {"bound arithmetic", bounds},
    {"first-moment thresholds admit witnesses", first_moment},
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<int> which;
  for (int i = 1; i < argc; ++i) which.push_back(std::stoi(argv[i]));
  if (which.empty())
    for (std::size_t i = 1; i <= kCriteria.size(); ++i) which.push_back(static_cast<int>(i));

  int failures = 0;
  for (int id : which) {
    if (id < 1 || id > static_cast<int>(kCriteria.size())) {
      std::cerr << "unknown criterion " << id << "\n";
      return 2;
    }
    const auto& crit = kCriteria[id - 1];
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      crit.run(c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail << "\n    exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s [%d] %s (%.2fs)%s\n", c.ok ? "PASS" : "FAIL", id, crit.name, secs, c.detail.str().c_str());
    failures += !c.ok;
  }
  return failures == 0 ? 0 : 1;
}

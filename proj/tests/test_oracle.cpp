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

#include "patstat/errors.hpp"
#include "patstat/oracle.hpp"
#include "reference.hpp"

using namespace patstat;
using patstat::testing::for_each_word;
using patstat::testing::pattern_corpus;
using patstat::testing::reference_count;

namespace {

Pattern P(const char* s) { return Pattern::parse(s); }

}  // namespace

TEST(CountFull, Examples) {
  EXPECT_EQ(count_full(Word::parse("11111111", 2), P("aba")), 34);
  EXPECT_EQ(count_full(Word::parse("abc", 3), P("a")), 6);
  EXPECT_EQ(count_full(Word::parse("aaa", 1), P("aa")), 2);
  EXPECT_GE(count_full(Word::parse("tennessee", 26), P("abaca")), 1);
}

TEST(CountAbelian, Examples) {
  EXPECT_GE(count_abelian(Word::parse("valhalla", 26), P("abaa")), 1);
  EXPECT_EQ(count_full(Word::parse("valhalla", 26), P("abaa")), 1);  // l.ha.l.l
  EXPECT_EQ(count_abelian(Word::parse("ab", 2), P("aa")), 0);
  EXPECT_EQ(count_abelian(Word::parse("aabb", 2), P("ab")), 10);
}

TEST(CountPartial, Examples) {
  const auto w = PartialWord::parse("velve.ta", 26);
  EXPECT_GE(count_partial(w, P("abab"), CountKind::PartialMorphism), 1);
  EXPECT_GE(count_partial(w, P("abab"), CountKind::PartialCollapsed), 1);

  const auto holes = PartialWord::parse("..", 2);
  EXPECT_EQ(count_partial(holes, P("aa"), CountKind::PartialMorphism), 2);
  EXPECT_EQ(count_partial(holes, P("aa"), CountKind::PartialCollapsed), 1);
  EXPECT_THROW(count_partial(holes, P("aa"), CountKind::Full), DomainError);
  EXPECT_THROW(count(holes, P("aa"), CountKind::Abelian), DomainError);
}

TEST(CountPartial, HoleFreeMatchesFull) {
  for_each_word(6, 2, false, [](const std::vector<Symbol>& s) {
    const Word w(s, 2);
    for (const char* p : {"aa", "aba", "abab"}) {
      const auto f = count_full(w, P(p));
      EXPECT_EQ(count_partial(w, P(p), CountKind::PartialMorphism), f);
      EXPECT_EQ(count_partial(w, P(p), CountKind::PartialCollapsed), f);
    }
  });
}

TEST(CountFull, SingleVariable) {
  for (std::size_t n = 1; n <= 7; ++n)
    for_each_word(n, 2, false, [n](const std::vector<Symbol>& s) {
      EXPECT_EQ(count_full(Word(s, 2), P("a")), n * (n + 1) / 2);
    });
}

// The library's block-by-block enumeration against the length-vector
// reference, on every word of small length.
TEST(Oracle, MatchesReferenceOnFullWords) {
  for (int m : {1, 2, 3}) {
    const std::size_t max_n = m == 3 ? 5 : 7;
    for (std::size_t n = 1; n <= max_n; ++n)
      for_each_word(n, m, false, [&](const std::vector<Symbol>& s) {
        const Word w(s, m);
        for (const char* p : pattern_corpus()) {
          EXPECT_EQ(count_full(w, P(p)), reference_count(s, m, P(p), CountKind::Full));
          EXPECT_EQ(count_abelian(w, P(p)), reference_count(s, m, P(p), CountKind::Abelian));
        }
      });
  }
}

TEST(Oracle, MorphismCountMatchesNaiveEnumeration) {
  for (std::size_t n = 1; n <= 5; ++n)
    for_each_word(n, 2, true, [&](const std::vector<Symbol>& s) {
      const PartialWord w(s, 2);
      for (const char* p : {"a", "aa", "ab", "aba", "aab", "abab", "abba", "aaa"}) {
        EXPECT_EQ(count_partial(w, P(p), CountKind::PartialMorphism),
                  reference_count(s, 2, P(p), CountKind::PartialMorphism))
            << w.to_string() << " " << p;
        EXPECT_EQ(count_partial(w, P(p), CountKind::PartialCollapsed),
                  reference_count(s, 2, P(p), CountKind::PartialCollapsed))
            << w.to_string() << " " << p;
      }
    });
}

TEST(Oracle, Orderings) {
  for_each_word(6, 2, true, [&](const std::vector<Symbol>& s) {
    const PartialWord pw(s, 2);
    for (const char* p : {"aa", "aba", "abba"}) {
      EXPECT_GE(count_partial(pw, P(p), CountKind::PartialMorphism),
                count_partial(pw, P(p), CountKind::PartialCollapsed));
    }
  });
  for_each_word(7, 2, false, [&](const std::vector<Symbol>& s) {
    const Word w(s, 2);
    for (const char* p : {"aa", "aba", "abba", "abacaba"})
      EXPECT_LE(count_full(w, P(p)), count_abelian(w, P(p)));
    for (const char* p : {"a", "ab", "abc"}) EXPECT_EQ(count_full(w, P(p)), count_abelian(w, P(p)));
  });
}

TEST(Oracle, HoleMonotonicity) {
  for_each_word(5, 2, true, [&](const std::vector<Symbol>& s) {
    for (const char* p : {"aa", "aba", "abab"}) {
      const auto base = count_partial(PartialWord(s, 2), P(p), CountKind::PartialMorphism);
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == kHole) continue;
        auto t = s;
        t[i] = kHole;
        EXPECT_GE(count_partial(PartialWord(t, 2), P(p), CountKind::PartialMorphism), base);
      }
    }
  });
}

TEST(Oracle, CompletionCompatibility) {
  for_each_word(5, 2, true, [&](const std::vector<Symbol>& s) {
    std::vector<std::size_t> holes;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s[i] == kHole) holes.push_back(i);
    for (const char* p : {"aa", "aba"}) {
      bool some = false;
      for (std::size_t mask = 0; mask < (std::size_t{1} << holes.size()); ++mask) {
        auto c = s;
        for (std::size_t j = 0; j < holes.size(); ++j) c[holes[j]] = (mask >> j) & 1;
        some = some || count_full(Word(c, 2), P(p)) > 0;
      }
      if (some) EXPECT_GE(count_partial(PartialWord(s, 2), P(p), CountKind::PartialMorphism), 1);
    }
  });
}

TEST(TotalCount, Examples) {
  EXPECT_EQ(total_count(CountKind::Full, 3, 2, P("aa")), 8);
  EXPECT_EQ(total_count(CountKind::PartialCollapsed, 2, 2, P("aa")), 7);
  EXPECT_EQ(total_count(CountKind::Abelian, 2, 2, P("aa")), 2);
  EXPECT_EQ(total_count(CountKind::PartialCollapsed, 2, 2, P("aa"), 0), 2);
  EXPECT_EQ(total_count(CountKind::PartialCollapsed, 2, 2, P("aa"), 1), 4);
  EXPECT_EQ(total_count(CountKind::PartialCollapsed, 2, 2, P("aa"), 2), 1);
}

TEST(TotalCount, StrictDecomposition) {
  for (auto kind : {CountKind::PartialCollapsed, CountKind::PartialMorphism})
    for (const char* p : {"aa", "aba", "abab"})
      for (std::size_t n = 1; n <= 6; ++n) {
        BigCount by_holes = 0;
        for (std::size_t h = 0; h <= n; ++h) by_holes += total_count(kind, n, 2, P(p), h);
        EXPECT_EQ(total_count(kind, n, 2, P(p)), by_holes);
        EXPECT_EQ(total_count(kind, n, 2, P(p), 0), total_count(CountKind::Full, n, 2, P(p)));
      }
}

TEST(TotalCount, Population) {
  EXPECT_EQ(population(CountKind::Full, 5, 3, std::nullopt), 243);
  EXPECT_EQ(population(CountKind::PartialCollapsed, 3, 2, std::nullopt), 27);
  EXPECT_EQ(population(CountKind::PartialMorphism, 4, 2, 2), 6 * 4);
  EXPECT_THROW(population(CountKind::Full, 4, 2, 1), DomainError);
}

TEST(TotalCount, Errors) {
  EXPECT_THROW(total_count(CountKind::Full, 0, 2, P("a")), DomainError);
  EXPECT_THROW(total_count(CountKind::Full, 3, 0, P("a")), DomainError);
  EXPECT_THROW(total_count(CountKind::Full, 3, 2, P("a"), 1), DomainError);
  EXPECT_THROW(total_count(CountKind::PartialCollapsed, 3, 2, P("a"), 4), DomainError);
  TotalOptions small;
  small.budget = 100;
  EXPECT_THROW(total_count(CountKind::Full, 7, 2, P("aa"), std::nullopt, small), BudgetExceeded);
}

TEST(TotalCount, ThreadCountDoesNotChangeResult) {
  for (auto kind : {CountKind::Full, CountKind::Abelian, CountKind::PartialCollapsed,
                    CountKind::PartialMorphism}) {
    TotalOptions one, many;
    many.threads = 3;
    const std::size_t n = is_partial(kind) ? 6 : 9;
    EXPECT_EQ(total_count(kind, n, 3, P("aba"), std::nullopt, one),
              total_count(kind, n, 3, P("aba"), std::nullopt, many));
  }
}

TEST(MeanExact, Examples) {
  EXPECT_EQ(mean_exact(CountKind::Full, 2, 2, P("aa")), mpq_class(1, 2));
  EXPECT_EQ(mean_exact(CountKind::Full, 1, 3, P("ab")), 0);
  EXPECT_EQ(mean_exact(CountKind::PartialCollapsed, 2, 2, P("aa"), std::nullopt, true), 1);
  EXPECT_THROW(mean_exact(CountKind::Full, 2, 2, P("aa"), std::nullopt, true), DomainError);
  EXPECT_THROW(mean_exact(CountKind::PartialCollapsed, 2, 2, P("aa"), 1, true), DomainError);
}

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

#include "patstat/oracle.hpp"

#include <algorithm>
#include <thread>

#include "patstat/errors.hpp"

namespace patstat {

bool is_partial(CountKind kind) {
  return kind == CountKind::PartialMorphism || kind == CountKind::PartialCollapsed;
}

OccurrenceCounter::OccurrenceCounter(std::span<const Symbol> text, int alphabet_size,
                                     const Pattern& p, CountKind kind)
    : text_(text), m_(alphabet_size), p_(p), kind_(kind) {
  const auto r = static_cast<std::size_t>(p.num_variables());
  len_.assign(r, 0);
  placed_.assign(r, 0);
  first_.assign(r, 0);
  if (kind_ == CountKind::Abelian) {
    hist_.assign(r, std::vector<int>(static_cast<std::size_t>(m_), 0));
    scratch_hist_.assign(static_cast<std::size_t>(m_), 0);
  }
  if (is_partial(kind_)) {
    overlay_.resize(r);
    open_.assign(r, 0);
    fills_.resize(r);
  }
  if (kind_ == CountKind::PartialMorphism) {
    m_pow_.resize(text_.size() + 1);
    m_pow_[0] = 1;
    for (std::size_t i = 1; i < m_pow_.size(); ++i) m_pow_[i] = m_pow_[i - 1] * m_;
  }
}

bool OccurrenceCounter::place_block(std::size_t v, std::size_t pos, std::size_t len) {
  const Symbol* block = text_.data() + pos;
  if (placed_[v] == 0) {
    first_[v] = pos;
    switch (kind_) {
      case CountKind::Full:
        break;
      case CountKind::Abelian: {
        auto& h = hist_[v];
        std::ranges::fill(h, 0);
        for (std::size_t c = 0; c < len; ++c) ++h[static_cast<std::size_t>(block[c])];
        break;
      }
      case CountKind::PartialMorphism:
      case CountKind::PartialCollapsed:
        overlay_[v].assign(block, block + len);
        open_[v] = static_cast<std::size_t>(std::count(block, block + len, kHole));
        fills_[v].clear();
        break;
    }
    ++placed_[v];
    return true;
  }

  const Symbol* ref = text_.data() + first_[v];
  switch (kind_) {
    case CountKind::Full:
      if (!std::equal(block, block + len, ref)) return false;
      break;
    case CountKind::Abelian: {
      for (std::size_t c = 0; c < len; ++c) ++scratch_hist_[static_cast<std::size_t>(block[c])];
      const bool same = scratch_hist_ == hist_[v];
      for (std::size_t c = 0; c < len; ++c) scratch_hist_[static_cast<std::size_t>(block[c])] = 0;
      if (!same) return false;
      break;
    }
    case CountKind::PartialMorphism:
    case CountKind::PartialCollapsed: {
      auto& overlay = overlay_[v];
      auto& fills = fills_[v];
      const std::size_t mark = fills.size();
      for (std::size_t c = 0; c < len; ++c) {
        const Symbol b = block[c];
        if (b == kHole) continue;
        if (overlay[c] == kHole) {
          overlay[c] = b;
          fills.push_back(c);
        } else if (overlay[c] != b) {
          while (fills.size() > mark) {
            overlay[fills.back()] = kHole;
            fills.pop_back();
          }
          return false;
        }
      }
      open_[v] -= fills.size() - mark;
      fill_marks_.push_back(mark);
      break;
    }
  }
  ++placed_[v];
  return true;
}

void OccurrenceCounter::undo_block(std::size_t v) {
  --placed_[v];
  if (placed_[v] == 0 || !is_partial(kind_)) return;
  const std::size_t mark = fill_marks_.back();
  fill_marks_.pop_back();
  auto& fills = fills_[v];
  open_[v] += fills.size() - mark;
  while (fills.size() > mark) {
    overlay_[v][fills.back()] = kHole;
    fills.pop_back();
  }
}

template <class Leaf>
bool OccurrenceCounter::descend(std::size_t t, std::size_t pos, std::size_t limit,
                                bool exact_end, Leaf& leaf) {
  const std::size_t k = p_.size();
  if (t == k) {
    if (exact_end && pos != limit) return false;
    return leaf();
  }
  const auto v = static_cast<std::size_t>(p_[t]);
  const std::size_t rest = k - t - 1;  // every later block takes at least one letter
  if (pos + rest >= limit) return false;
  const std::size_t room = limit - pos - rest;

  if (len_[v] != 0) {
    const std::size_t len = len_[v];
    if (len > room) return false;
    if (!place_block(v, pos, len)) return false;
    const bool stop = descend(t + 1, pos + len, limit, exact_end, leaf);
    undo_block(v);
    return stop;
  }

  const std::size_t lo = (exact_end && rest == 0) ? room : 1;
  for (std::size_t len = lo; len <= room; ++len) {
    len_[v] = len;
    if (place_block(v, pos, len)) {
      const bool stop = descend(t + 1, pos + len, limit, exact_end, leaf);
      undo_block(v);
      if (stop) {
        len_[v] = 0;
        return true;
      }
    }
  }
  len_[v] = 0;
  return false;
}

BigCount OccurrenceCounter::count_from(std::size_t start) {
  BigCount total = 0;
  if (kind_ == CountKind::PartialMorphism) {
    auto leaf = [&] {
      std::size_t open = 0;
      for (std::size_t o : open_) open += o;
      total += m_pow_[open];
      return false;
    };
    descend(0, start, text_.size(), false, leaf);
  } else {
    unsigned long unit = 0;
    auto leaf = [&] {
      if (++unit == ~0ul) {
        total += unit;
        unit = 0;
      }
      return false;
    };
    descend(0, start, text_.size(), false, leaf);
    total += unit;
  }
  return total;
}

BigCount OccurrenceCounter::count_all() {
  BigCount total = 0;
  for (std::size_t start = 0; start < text_.size(); ++start) total += count_from(start);
  return total;
}

bool OccurrenceCounter::any_ending_at(std::size_t last) {
  if (last >= text_.size()) return false;
  const std::size_t k = p_.size();
  if (last + 1 < k) return false;
  auto leaf = [] { return true; };
  for (std::size_t start = last + 1 - k + 1; start-- > 0;) {
    if (descend(0, start, last + 1, true, leaf)) return true;
  }
  return false;
}

BigCount count_full(const Word& w, const Pattern& p) {
  return OccurrenceCounter(w.letters(), w.alphabet_size(), p, CountKind::Full).count_all();
}

BigCount count_abelian(const Word& w, const Pattern& p) {
  return OccurrenceCounter(w.letters(), w.alphabet_size(), p, CountKind::Abelian).count_all();
}

BigCount count_partial(const PartialWord& w, const Pattern& p, CountKind kind) {
  if (!is_partial(kind)) throw DomainError("count_partial needs a partial counting kind");
  return OccurrenceCounter(w.chars(), w.alphabet_size(), p, kind).count_all();
}

BigCount count(const PartialWord& w, const Pattern& p, CountKind kind) {
  if (!is_partial(kind) && w.hole_count() != 0)
    throw DomainError("full and abelian counting need a word without holes");
  return OccurrenceCounter(w.chars(), w.alphabet_size(), p, kind).count_all();
}

BigCount population(CountKind kind, std::size_t n, int m, std::optional<std::size_t> holes) {
  BigCount result;
  if (!is_partial(kind)) {
    if (holes) throw DomainError("a hole count only applies to partial kinds");
    mpz_ui_pow_ui(result.get_mpz_t(), static_cast<unsigned long>(m), n);
    return result;
  }
  if (!holes) {
    mpz_ui_pow_ui(result.get_mpz_t(), static_cast<unsigned long>(m) + 1, n);
    return result;
  }
  if (*holes > n) throw DomainError("hole count exceeds word length");
  BigCount letters;
  mpz_bin_uiui(result.get_mpz_t(), n, *holes);
  mpz_ui_pow_ui(letters.get_mpz_t(), static_cast<unsigned long>(m), n - *holes);
  return result * letters;
}

namespace {

struct Enumerator {
  CountKind kind;
  std::size_t n;
  int m;
  const Pattern& p;
  std::optional<std::size_t> holes;
  std::vector<Symbol> buf;
  BigCount sum = 0;

  void fill(std::size_t i, std::size_t used) {
    if (i == n) {
      sum += OccurrenceCounter(buf, m, p, kind).count_all();
      return;
    }
    const std::size_t rem = n - i;
    const bool letters_ok = !holes || *holes - used <= rem - 1;
    if (letters_ok) {
      for (Symbol c = 0; c < m; ++c) {
        buf[i] = c;
        fill(i + 1, used);
      }
    }
    if (is_partial(kind) && (!holes || used < *holes)) {
      buf[i] = kHole;
      fill(i + 1, used + 1);
    }
  }
};

}  // namespace

BigCount total_count(CountKind kind, std::size_t n, int m, const Pattern& p,
                     std::optional<std::size_t> holes, const TotalOptions& options) {
  if (n < 1) throw DomainError("word length n must be >= 1");
  if (m < 1) throw DomainError("alphabet size m must be >= 1");
  const BigCount pop = population(kind, n, m, holes);
  if (pop > BigCount(std::to_string(options.budget)))
    throw BudgetExceeded("enumerating " + pop.get_str() + " words exceeds the budget of " +
                         std::to_string(options.budget));

  // Partition on the first character; each worker owns a residue class.
  std::vector<Symbol> first_choices;
  for (Symbol c = 0; c < m; ++c) first_choices.push_back(c);
  if (is_partial(kind)) first_choices.push_back(kHole);

  const unsigned workers = std::max(1u, std::min<unsigned>(options.threads,
                                                           static_cast<unsigned>(first_choices.size())));
  std::vector<BigCount> partial(workers);
  auto run = [&](unsigned w) {
    Enumerator e{kind, n, m, p, holes, std::vector<Symbol>(n), 0};
    for (std::size_t i = w; i < first_choices.size(); i += workers) {
      const Symbol c = first_choices[i];
      const std::size_t used = c == kHole ? 1 : 0;
      if (holes) {
        if (used > *holes) continue;
        if (*holes - used > n - 1) continue;
      }
      e.buf[0] = c;
      e.fill(1, used);
    }
    partial[w] = e.sum;
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  BigCount total = 0;
  for (const auto& s : partial) total += s;
  return total;
}

mpq_class mean_exact(CountKind kind, std::size_t n, int m, const Pattern& p,
                     std::optional<std::size_t> holes, bool strict, const TotalOptions& options) {
  if (strict) {
    if (!is_partial(kind)) throw DomainError("strict means apply to partial kinds only");
    if (holes) throw DomainError("strict means cannot fix the hole count");
    const BigCount all = total_count(kind, n, m, p, std::nullopt, options);
    const BigCount full = total_count(kind, n, m, p, std::size_t{0}, options);
    mpq_class mean(all - full, population(kind, n, m, std::nullopt) -
                                   population(CountKind::Full, n, m, std::nullopt));
    mean.canonicalize();
    return mean;
  }
  mpq_class mean(total_count(kind, n, m, p, holes, options), population(kind, n, m, holes));
  mean.canonicalize();
  return mean;
}

}  // namespace patstat

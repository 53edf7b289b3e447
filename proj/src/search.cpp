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

#include "patstat/search.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "patstat/errors.hpp"

namespace patstat {

namespace {

class Searcher {
 public:
  Searcher(CountKind kind, const Pattern& p, int m, std::size_t length,
           std::optional<std::size_t> holes, bool symmetry, std::uint64_t max_nodes,
           std::atomic<std::uint64_t>& nodes)
      : partial_(is_partial(kind)),
        m_(m),
        length_(length),
        holes_(holes),
        symmetry_(symmetry),
        max_nodes_(max_nodes),
        nodes_(nodes),
        buf_(length, 0),
        counter_(buf_, m, p, kind) {}

  // Loads an avoiding prefix produced by an earlier search.
  void load(const std::vector<Symbol>& prefix) {
    std::copy(prefix.begin(), prefix.end(), buf_.begin());
    top_ = -1;
    used_holes_ = 0;
    for (Symbol c : prefix) {
      if (c == kHole)
        ++used_holes_;
      else
        top_ = std::max(top_, static_cast<int>(c));
    }
  }

  // Calls leaf(buf, depth) on every avoiding word of length `target` that
  // extends the loaded prefix of length `depth`; leaf returns false to stop.
  template <class Leaf>
  bool run(std::size_t depth, std::size_t target, Leaf&& leaf) {
    if (depth == target) return leaf(buf_);
    const std::size_t remaining = length_ - depth;  // including this position
    const int hi = symmetry_ ? std::min(m_ - 1, top_ + 1) : m_ - 1;
    for (int c = 0; c <= hi + (partial_ ? 1 : 0); ++c) {
      const bool hole = c == hi + 1;
      if (holes_) {
        if (hole && used_holes_ >= *holes_) continue;
        if (!hole && *holes_ - used_holes_ >= remaining) continue;
      }
      if (nodes_.fetch_add(1, std::memory_order_relaxed) >= max_nodes_) {
        exceeded_ = true;
        return false;
      }
      buf_[depth] = hole ? kHole : c;
      if (counter_.any_ending_at(depth)) continue;
      const int saved_top = top_;
      if (hole)
        ++used_holes_;
      else
        top_ = std::max(top_, c);
      deepest_ = std::max(deepest_, depth + 1);
      const bool go_on = run(depth + 1, target, leaf);
      top_ = saved_top;
      if (hole) --used_holes_;
      if (!go_on) return false;
    }
    return true;
  }

  bool exceeded() const { return exceeded_; }
  std::size_t deepest() const { return deepest_; }

 private:
  bool partial_;
  int m_;
  std::size_t length_;
  std::optional<std::size_t> holes_;
  bool symmetry_;
  std::uint64_t max_nodes_;
  std::atomic<std::uint64_t>& nodes_;
  std::vector<Symbol> buf_;
  OccurrenceCounter counter_;
  int top_ = -1;
  std::size_t used_holes_ = 0;
  std::size_t deepest_ = 0;
  bool exceeded_ = false;
};

void check_search_args(CountKind kind, int m, std::size_t length, std::optional<std::size_t> holes) {
  if (m < 1) throw DomainError("alphabet size m must be >= 1");
  if (length < 1) throw DomainError("search length must be >= 1");
  if (holes && !is_partial(kind)) throw DomainError("holes are only meaningful for partial kinds");
  if (holes && *holes > length) throw DomainError("holes must not exceed the length");
}

PartialWord verified(CountKind kind, const Pattern& p, int m, const std::vector<Symbol>& w) {
  PartialWord word(w, m);
  if (count(word, p, kind) != 0)
    throw std::logic_error("search produced a witness that encounters the pattern");
  return word;
}

}  // namespace

SearchOutcome find_avoiding(CountKind kind, const Pattern& p, int m, std::size_t length,
                            std::optional<std::size_t> holes, const SearchBudget& budget,
                            bool symmetry_breaking) {
  check_search_args(kind, m, length, holes);
  if (budget.max_nodes == 0) throw DomainError("search budget must be positive");
  std::atomic<std::uint64_t> nodes{0};
  SearchOutcome out;
  std::vector<Symbol> witness;
  auto take = [&](const std::vector<Symbol>& buf) {
    witness = buf;
    return false;
  };

  const bool parallel = budget.threads > 1 && length > budget.split_depth && budget.split_depth > 0;
  if (!parallel) {
    Searcher s(kind, p, m, length, holes, symmetry_breaking, budget.max_nodes, nodes);
    const bool exhausted = s.run(0, length, take);
    out.nodes = nodes.load();
    if (!exhausted && !s.exceeded()) {
      out.status = SearchStatus::Found;
      out.witness = verified(kind, p, m, witness);
    } else {
      out.status = s.exceeded() ? SearchStatus::BudgetExceeded : SearchStatus::ExhaustedNoWitness;
    }
    return out;
  }

  // Collect the avoiding prefixes in order, then search their subtrees on
  // workers. The reported witness comes from the first prefix (in order)
  // whose subtree is not exhausted, so the result matches the serial one.
  std::vector<std::vector<Symbol>> prefixes;
  {
    Searcher s(kind, p, m, length, holes, symmetry_breaking, budget.max_nodes, nodes);
    s.run(0, budget.split_depth, [&](const std::vector<Symbol>& buf) {
      prefixes.emplace_back(buf.begin(), buf.begin() + static_cast<std::ptrdiff_t>(budget.split_depth));
      return true;
    });
    if (s.exceeded()) return {SearchStatus::BudgetExceeded, std::nullopt, nodes.load()};
  }
  std::vector<SearchStatus> status(prefixes.size(), SearchStatus::ExhaustedNoWitness);
  std::vector<std::vector<Symbol>> found(prefixes.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_hit{prefixes.size()};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < prefixes.size();) {
      if (i > first_hit.load()) break;
      Searcher s(kind, p, m, length, holes, symmetry_breaking, budget.max_nodes, nodes);
      s.load(prefixes[i]);
      const bool exhausted = s.run(budget.split_depth, length, [&](const std::vector<Symbol>& buf) {
        found[i] = buf;
        return false;
      });
      if (s.exceeded()) {
        status[i] = SearchStatus::BudgetExceeded;
      } else if (!exhausted) {
        status[i] = SearchStatus::Found;
      } else {
        continue;
      }
      std::size_t cur = first_hit.load();
      while (i < cur && !first_hit.compare_exchange_weak(cur, i)) {
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < budget.threads; ++t) pool.emplace_back(worker);
  }
  out.nodes = nodes.load();
  for (std::size_t i = 0; i < prefixes.size(); ++i) {
    if (status[i] == SearchStatus::ExhaustedNoWitness) continue;
    out.status = status[i];
    if (status[i] == SearchStatus::Found) out.witness = verified(kind, p, m, found[i]);
    return out;
  }
  out.status = SearchStatus::ExhaustedNoWitness;
  return out;
}

std::uint64_t for_each_avoiding(CountKind kind, const Pattern& p, int m, std::size_t length,
                                std::optional<std::size_t> holes,
                                const std::function<bool(const PartialWord&)>& visit) {
  check_search_args(kind, m, length, holes);
  std::atomic<std::uint64_t> nodes{0};
  std::uint64_t seen = 0;
  Searcher s(kind, p, m, length, holes, false, UINT64_MAX, nodes);
  s.run(0, length, [&](const std::vector<Symbol>& buf) {
    ++seen;
    return visit(PartialWord(buf, m));
  });
  return seen;
}

RamseyLength exact_ramsey_length(CountKind kind, const Pattern& p, int m, std::size_t n_max,
                                 const SearchBudget& budget) {
  if (kind != CountKind::Full && kind != CountKind::Abelian)
    throw DomainError("exact Ramsey lengths are computed for full and abelian kinds");
  check_search_args(kind, m, std::max<std::size_t>(n_max, 1), std::nullopt);
  if (n_max == 0) return NotFoundBelow{0};
  std::atomic<std::uint64_t> nodes{0};
  Searcher s(kind, p, m, n_max, std::nullopt, true, budget.max_nodes, nodes);
  s.run(0, n_max, [](const std::vector<Symbol>&) { return false; });
  if (s.exceeded()) throw BudgetExceeded("search budget exhausted before the Ramsey length was settled");
  if (s.deepest() >= n_max) return NotFoundBelow{n_max};
  return s.deepest() + 1;
}

}  // namespace patstat

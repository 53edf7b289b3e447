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

#include "patstat/words.hpp"

#include <algorithm>
#include <numeric>

#include "patstat/errors.hpp"

namespace patstat {

namespace {

constexpr std::string_view kDiamond = "\xE2\x8B\x84";  // U+22C4

void check_alphabet(int m) {
  if (m < 1) throw DomainError("alphabet size m must be >= 1");
}

void check_letters(std::span<const Symbol> chars, int m, bool allow_holes) {
  for (Symbol c : chars) {
    if (c == kHole && allow_holes) continue;
    if (c < 0 || c >= m)
      throw DomainError("letter index " + std::to_string(c) + " outside alphabet of size " +
                        std::to_string(m));
  }
}

}  // namespace

PatternSignature PatternSignature::from_multiplicities(std::vector<std::uint64_t> mults) {
  if (mults.empty()) throw DomainError("a pattern needs at least one variable");
  if (std::ranges::find(mults, 0u) != mults.end())
    throw DomainError("variable multiplicities must be >= 1");
  std::ranges::sort(mults);
  PatternSignature sig;
  sig.r = static_cast<int>(mults.size());
  sig.s = static_cast<int>(std::ranges::count(mults, 1u));
  sig.mults = std::move(mults);
  return sig;
}

std::uint64_t PatternSignature::length() const {
  return std::accumulate(mults.begin(), mults.end(), std::uint64_t{0});
}

Pattern::Pattern(std::vector<Symbol> symbols) {
  if (symbols.empty()) throw DomainError("pattern must be nonempty");
  std::vector<std::pair<Symbol, Symbol>> renaming;
  symbols_.reserve(symbols.size());
  for (Symbol v : symbols) {
    if (v < 0) throw DomainError("pattern variables must be nonnegative");
    auto it = std::ranges::find(renaming, v, &std::pair<Symbol, Symbol>::first);
    if (it == renaming.end()) {
      renaming.emplace_back(v, num_vars_++);
      symbols_.push_back(renaming.back().second);
    } else {
      symbols_.push_back(it->second);
    }
  }
}

Pattern Pattern::parse(std::string_view text) {
  std::vector<Symbol> symbols;
  for (char c : text) {
    if (c < 'a' || c > 'z')
      throw DomainError(std::string("malformed pattern: '") + c + "' is not a lowercase letter");
    symbols.push_back(c - 'a');
  }
  if (symbols.empty()) throw DomainError("malformed pattern: empty");
  return Pattern(std::move(symbols));
}

std::vector<std::uint64_t> Pattern::variable_counts() const {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(num_vars_), 0);
  for (Symbol v : symbols_) ++counts[static_cast<std::size_t>(v)];
  return counts;
}

PatternSignature Pattern::signature() const {
  return PatternSignature::from_multiplicities(variable_counts());
}

std::string Pattern::to_string() const {
  if (num_vars_ > 26) return "<pattern with " + std::to_string(num_vars_) + " variables>";
  std::string out;
  for (Symbol v : symbols_) out.push_back(static_cast<char>('a' + v));
  return out;
}

Pattern zimin(int i) {
  if (i < 1) throw DomainError("zimin index must be >= 1");
  if (i > 24) throw DomainError("zimin pattern too long to materialize; use zimin_signature");
  std::vector<Symbol> z{0};
  for (int j = 1; j < i; ++j) {
    std::vector<Symbol> next = z;
    next.push_back(j);
    next.insert(next.end(), z.begin(), z.end());
    z = std::move(next);
  }
  return Pattern(std::move(z));
}

PatternSignature zimin_signature(int i) {
  if (i < 1) throw DomainError("zimin index must be >= 1");
  if (i > 63) throw DomainError("zimin index must be <= 63");
  std::vector<std::uint64_t> mults;
  for (int j = 1; j <= i; ++j) mults.push_back(std::uint64_t{1} << (i - j));
  return PatternSignature::from_multiplicities(std::move(mults));
}

Word::Word(std::vector<Symbol> letters, int alphabet_size)
    : letters_(std::move(letters)), m_(alphabet_size) {
  check_alphabet(m_);
  check_letters(letters_, m_, false);
}

Word Word::parse(std::string_view text, int alphabet_size) {
  return Word(parse_letters(text, false, '.'), alphabet_size);
}

std::string Word::to_string() const { return render_letters(letters_); }

PartialWord::PartialWord(std::vector<Symbol> chars, int alphabet_size)
    : chars_(std::move(chars)), m_(alphabet_size) {
  check_alphabet(m_);
  check_letters(chars_, m_, true);
}

PartialWord::PartialWord(const Word& w)
    : chars_(w.letters().begin(), w.letters().end()), m_(w.alphabet_size()) {}

PartialWord PartialWord::parse(std::string_view text, int alphabet_size, char hole) {
  return PartialWord(parse_letters(text, true, hole), alphabet_size);
}

std::size_t PartialWord::hole_count() const {
  return static_cast<std::size_t>(std::ranges::count(chars_, kHole));
}

double PartialWord::hole_density() const {
  return chars_.empty() ? 0.0 : static_cast<double>(hole_count()) / static_cast<double>(size());
}

std::string PartialWord::to_string(char hole) const { return render_letters(chars_, hole); }

bool compatible(const PartialWord& u, const PartialWord& v) {
  if (u.size() != v.size())
    throw DomainError("compatibility needs equal lengths (" + std::to_string(u.size()) + " vs " +
                      std::to_string(v.size()) + ")");
  if (u.alphabet_size() != v.alphabet_size())
    throw DomainError("compatibility needs a common alphabet");
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] != kHole && v[i] != kHole && u[i] != v[i]) return false;
  }
  return true;
}

Morphism::Morphism(std::vector<Word> images) : images_(std::move(images)) {
  if (images_.empty()) throw DomainError("morphism needs at least one image");
  for (const Word& w : images_) {
    if (w.size() == 0) throw DomainError("morphism images must be nonempty (nonerasing)");
    if (w.alphabet_size() != images_.front().alphabet_size())
      throw DomainError("morphism images must share one alphabet");
  }
}

const Word& Morphism::image(Symbol variable) const {
  if (variable < 0 || static_cast<std::size_t>(variable) >= images_.size())
    throw DomainError("morphism has no image for variable " + std::to_string(variable));
  return images_[static_cast<std::size_t>(variable)];
}

Word apply_morphism(const Morphism& h, const Pattern& p) {
  std::vector<Symbol> out;
  for (Symbol v : p.symbols()) {
    const Word& img = h.image(v);
    out.insert(out.end(), img.letters().begin(), img.letters().end());
  }
  return Word(std::move(out), h.image(0).alphabet_size());
}

std::vector<Symbol> parse_letters(std::string_view text, bool allow_holes, char hole) {
  std::vector<Symbol> out;
  enum class Class { Unknown, Letters, Digits } cls = Class::Unknown;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (allow_holes && text.substr(i, kDiamond.size()) == kDiamond) {
      out.push_back(kHole);
      i += kDiamond.size() - 1;
      continue;
    }
    if (allow_holes && c == hole) {
      out.push_back(kHole);
      continue;
    }
    Class here;
    if (c >= 'a' && c <= 'z') {
      here = Class::Letters;
      out.push_back(c - 'a');
    } else if (c >= '0' && c <= '9') {
      here = Class::Digits;
      out.push_back(c - '0');
    } else {
      throw DomainError(std::string("malformed word: unexpected character '") + c + "'");
    }
    if (cls != Class::Unknown && cls != here)
      throw DomainError("malformed word: mixes letters and digits");
    cls = here;
  }
  return out;
}

std::string render_letters(std::span<const Symbol> chars, char hole) {
  std::string out;
  for (Symbol c : chars) {
    if (c == kHole)
      out.push_back(hole);
    else if (c < 26)
      out.push_back(static_cast<char>('a' + c));
    else
      out += "<" + std::to_string(c) + ">";
  }
  return out;
}

}  // namespace patstat

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

// Patterns, full words, partial words and nonerasing morphisms.
//
// Letters are dense indices in [0, m); the hole of a partial word is kHole.
// Text forms exist only for I/O: patterns use 'a'..'z', words use 'a'..'z'
// or '0'..'9', and holes default to '.'.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace patstat {

using Symbol = std::int32_t;
inline constexpr Symbol kHole = -1;

/// Multiplicity profile of a pattern: r distinct variables, s of which occur
/// once, and the nondecreasing list of occurrence counts.
struct PatternSignature {
  int r = 0;
  int s = 0;
  std::vector<std::uint64_t> mults;

  /// Sorts the multiplicities and derives r and s. Every entry must be >= 1.
  static PatternSignature from_multiplicities(std::vector<std::uint64_t> mults);

  /// Multiplicities of the repeated variables (those with k_j >= 2).
  std::span<const std::uint64_t> repeated() const {
    return std::span<const std::uint64_t>(mults).subspan(static_cast<std::size_t>(s));
  }

  /// Sum of all multiplicities, i.e. the pattern length.
  std::uint64_t length() const;

  bool operator==(const PatternSignature&) const = default;
};

/// A nonempty word over variables, normalized so variables are numbered by
/// first appearance (so "bab" and "aba" are the same Pattern).
class Pattern {
 public:
  explicit Pattern(std::vector<Symbol> symbols);

  /// Parses lowercase letters, e.g. "abacaba".
  static Pattern parse(std::string_view text);

  std::size_t size() const { return symbols_.size(); }
  int num_variables() const { return num_vars_; }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }
  std::span<const Symbol> symbols() const { return symbols_; }

  /// Occurrence count of each variable, indexed by variable id.
  std::vector<std::uint64_t> variable_counts() const;
  PatternSignature signature() const;
  std::string to_string() const;

  bool operator==(const Pattern&) const = default;

 private:
  std::vector<Symbol> symbols_;
  int num_vars_ = 0;
};

/// Z_1 = a, Z_i = Z_{i-1} x_i Z_{i-1}.
Pattern zimin(int i);

/// Signature of Z_i without materializing it: variable j occurs 2^{i-j} times.
PatternSignature zimin_signature(int i);

inline PatternSignature signature(const Pattern& p) { return p.signature(); }

/// A full word over an m-letter alphabet.
class Word {
 public:
  Word(std::vector<Symbol> letters, int alphabet_size);

  /// Parses letters 'a'..'z' or digits '0'..'9' (one class per word).
  static Word parse(std::string_view text, int alphabet_size);

  std::size_t size() const { return letters_.size(); }
  int alphabet_size() const { return m_; }
  Symbol operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Symbol> letters() const { return letters_; }
  std::string to_string() const;

  bool operator==(const Word&) const = default;

 private:
  std::vector<Symbol> letters_;
  int m_;
};

/// A word whose entries are letters in [0, m) or kHole.
class PartialWord {
 public:
  PartialWord(std::vector<Symbol> chars, int alphabet_size);
  PartialWord(const Word& w);  // NOLINT: a full word is a partial word

  /// Like Word::parse, plus `hole` (and the UTF-8 diamond) as the hole.
  static PartialWord parse(std::string_view text, int alphabet_size, char hole = '.');

  std::size_t size() const { return chars_.size(); }
  int alphabet_size() const { return m_; }
  Symbol operator[](std::size_t i) const { return chars_[i]; }
  std::span<const Symbol> chars() const { return chars_; }
  std::size_t hole_count() const;
  /// h / n; zero for the empty word.
  double hole_density() const;
  std::string to_string(char hole = '.') const;

  bool operator==(const PartialWord&) const = default;

 private:
  std::vector<Symbol> chars_;
  int m_;
};

/// u ↑ v: equal length, and equal wherever both are letters.
bool compatible(const PartialWord& u, const PartialWord& v);

/// A nonerasing morphism from pattern variables to words over one alphabet.
class Morphism {
 public:
  /// images[v] is the image of variable v; every image must be nonempty.
  Morphism(std::vector<Word> images);

  std::size_t num_variables() const { return images_.size(); }
  const Word& image(Symbol variable) const;

 private:
  std::vector<Word> images_;
};

/// h(p): the images of p's variables concatenated in pattern order.
Word apply_morphism(const Morphism& h, const Pattern& p);

/// Text helpers shared by the CLI.
std::vector<Symbol> parse_letters(std::string_view text, bool allow_holes, char hole);
std::string render_letters(std::span<const Symbol> chars, char hole = '.');

}  // namespace patstat

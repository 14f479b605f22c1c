// Copyright 2026 The hotc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HOT_WORD_SET_HPP
#define HOT_WORD_SET_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hot {

/// Ordered labels that index the bits of a word.
using Universe = std::vector<std::string>;

inline constexpr std::size_t kMaxUniverse = 63;
/// Largest universe for which full enumeration (2^n words) is attempted.
inline constexpr std::size_t kMaxEnumerated = 26;

/// Bits are packed so that the first label of the universe is the most
/// significant bit. Numeric order of the packed value is then the
/// lexicographic order of the word, 0 before 1.
constexpr std::uint64_t bit_mask(std::size_t n) {
  return n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n));
}

constexpr int bit_at(std::uint64_t bits, std::size_t n, std::size_t index) {
  return static_cast<int>((bits >> (n - 1 - index)) & 1U);
}

constexpr std::uint64_t with_bit(std::uint64_t bits, std::size_t n, std::size_t index,
                                 int value) {
  const std::uint64_t m = std::uint64_t{1} << (n - 1 - index);
  return value ? (bits | m) : (bits & ~m);
}

/// Throws on duplicates or more than kMaxUniverse labels.
void validate_universe(const Universe& universe);
std::size_t index_in(const Universe& universe, std::string_view label);

/// A labeled binary string. The empty-universe word is the null string.
class BitWord {
 public:
  BitWord() = default;
  BitWord(Universe universe, std::uint64_t bits);

  /// Parses "0_A1_B"; "ε" (or the empty string) is the null word.
  static BitWord parse(std::string_view text);

  const Universe& universe() const { return universe_; }
  std::uint64_t bits() const { return bits_; }
  std::size_t size() const { return universe_.size(); }
  bool is_null() const { return universe_.empty(); }
  int bit(std::string_view label) const;

  std::string to_string() const;

  friend bool operator==(const BitWord&, const BitWord&) = default;

 private:
  Universe universe_;
  std::uint64_t bits_ = 0;
};

std::string format_word(const Universe& universe, std::uint64_t bits);

/// A finite set of words over one universe, kept sorted and unique.
///
/// `annihilated()` records that a contraction met mismatched bits on at
/// least one word and dropped it.
class WordSet {
 public:
  WordSet() = default;
  explicit WordSet(Universe universe, std::vector<std::uint64_t> words = {},
                   bool annihilated = false);

  static WordSet parse(Universe universe, std::span<const std::string> words);

  const Universe& universe() const { return universe_; }
  std::span<const std::uint64_t> words() const { return words_; }
  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }
  bool annihilated() const { return annihilated_; }

  bool contains(std::uint64_t bits) const;
  bool contains(const BitWord& word) const;
  BitWord word(std::size_t i) const { return BitWord(universe_, words_.at(i)); }

  std::vector<std::string> to_strings() const;

  /// Same words over a permutation of the universe.
  WordSet reordered(const Universe& target) const;

  /// Equality ignores the annihilation flag.
  friend bool operator==(const WordSet& a, const WordSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }

 private:
  Universe universe_;
  std::vector<std::uint64_t> words_;
  bool annihilated_ = false;
};

/// W: every word over the universe.
WordSet full_set(const Universe& universe);
/// T: W without the all-ones word.
WordSet traceless_set(const Universe& universe);
/// e: the all-ones word.
BitWord all_ones(const Universe& universe);

/// W \ J
WordSet complement_perp(const WordSet& j);
/// T \ J
WordSet complement_bar(const WordSet& j);

WordSet set_union(const WordSet& a, const WordSet& b);
WordSet set_intersection(const WordSet& a, const WordSet& b);
WordSet set_difference(const WordSet& a, const WordSet& b);
bool is_subset(const WordSet& a, const WordSet& b);

/// Cartesian product over the concatenated universe. Universes must be disjoint.
WordSet concat(const WordSet& j, const WordSet& k);

using LabelPair = std::pair<std::string, std::string>;

/// A set of label pairs with no label used twice.
class ContractionSpec {
 public:
  ContractionSpec() = default;
  explicit ContractionSpec(std::vector<LabelPair> pairs);
  ContractionSpec(std::initializer_list<LabelPair> pairs)
      : ContractionSpec(std::vector<LabelPair>(pairs)) {}

  /// Parses "A:B,C:D". The empty string is the empty spec.
  static ContractionSpec parse(std::string_view text);

  const std::vector<LabelPair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  bool is_subset_of(const ContractionSpec& other) const;
  std::string to_string() const;

  friend bool operator==(const ContractionSpec&, const ContractionSpec&) = default;

 private:
  std::vector<LabelPair> pairs_;
};

/// Drops both positions when the bits agree; nullopt marks annihilation.
std::optional<BitWord> contract_word(const BitWord& word, std::string_view a,
                                     std::string_view b);

/// Contracts every word over all pairs; annihilated words are dropped and flagged.
WordSet contract_set(const WordSet& set, const ContractionSpec& pairs);

/// contract_set(concat(j, k), h); each pair links one label of j with one of k.
WordSet compose_sets(const WordSet& j, const WordSet& k, const ContractionSpec& h);

}  // namespace hot

#endif  // HOT_WORD_SET_HPP

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

#include "hot/word_set.hpp"

#include <algorithm>
#include <iterator>
#include <set>
#include <stdexcept>

namespace hot {

namespace {

constexpr std::string_view kNullWord = "ε";

void require_enumerable(const Universe& universe) {
  if (universe.size() > kMaxEnumerated)
    throw std::length_error("refusing to enumerate 2^" + std::to_string(universe.size()) +
                            " words");
}

void require_same_universe(const WordSet& a, const WordSet& b) {
  if (a.universe() != b.universe())
    throw std::invalid_argument("word sets live over different universes");
}

// Removes the listed bit positions (indices into the universe).
std::uint64_t drop_positions(std::uint64_t bits, std::size_t n,
                             const std::vector<std::size_t>& sorted_positions) {
  std::uint64_t out = 0;
  std::size_t next = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (next < sorted_positions.size() && sorted_positions[next] == i) {
      ++next;
      continue;
    }
    out = (out << 1) | static_cast<std::uint64_t>(bit_at(bits, n, i));
  }
  return out;
}

}  // namespace

void validate_universe(const Universe& universe) {
  if (universe.size() > kMaxUniverse)
    throw std::length_error("universe has " + std::to_string(universe.size()) +
                            " labels; at most 63 are supported");
  std::set<std::string_view> seen;
  for (const std::string& label : universe)
    if (!seen.insert(label).second)
      throw std::invalid_argument("duplicate label '" + label + "' in universe");
}

std::size_t index_in(const Universe& universe, std::string_view label) {
  auto it = std::find(universe.begin(), universe.end(), label);
  if (it == universe.end())
    throw std::invalid_argument("label '" + std::string(label) + "' not in universe");
  return static_cast<std::size_t>(it - universe.begin());
}

BitWord::BitWord(Universe universe, std::uint64_t bits)
    : universe_(std::move(universe)), bits_(bits) {
  validate_universe(universe_);
  if ((bits_ & ~bit_mask(universe_.size())) != 0)
    throw std::invalid_argument("word has bits outside its universe");
}

BitWord BitWord::parse(std::string_view text) {
  if (text.empty() || text == kNullWord) return BitWord();
  const auto is_upper = [](char c) { return c >= 'A' && c <= 'Z'; };
  // A bit starts wherever "<0|1>_<Uppercase>" appears.
  const auto bit_starts_at = [&](std::size_t p) {
    return p + 2 < text.size() && (text[p] == '0' || text[p] == '1') && text[p + 1] == '_' &&
           is_upper(text[p + 2]);
  };
  Universe universe;
  std::uint64_t bits = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (!bit_starts_at(pos))
      throw std::invalid_argument("malformed word '" + std::string(text) + "'");
    bits = (bits << 1) | static_cast<std::uint64_t>(text[pos] - '0');
    const std::size_t start = pos + 2;
    pos = start + 1;
    while (pos < text.size() && !bit_starts_at(pos)) ++pos;
    universe.emplace_back(text.substr(start, pos - start));
  }
  return BitWord(std::move(universe), bits);
}

int BitWord::bit(std::string_view label) const {
  return bit_at(bits_, universe_.size(), index_in(universe_, label));
}

std::string BitWord::to_string() const { return format_word(universe_, bits_); }

std::string format_word(const Universe& universe, std::uint64_t bits) {
  if (universe.empty()) return std::string(kNullWord);
  std::string out;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    out += static_cast<char>('0' + bit_at(bits, universe.size(), i));
    out += '_';
    out += universe[i];
  }
  return out;
}

WordSet::WordSet(Universe universe, std::vector<std::uint64_t> words, bool annihilated)
    : universe_(std::move(universe)), words_(std::move(words)), annihilated_(annihilated) {
  validate_universe(universe_);
  const std::uint64_t mask = bit_mask(universe_.size());
  for (std::uint64_t w : words_)
    if ((w & ~mask) != 0) throw std::invalid_argument("word has bits outside its universe");
  std::sort(words_.begin(), words_.end());
  words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

WordSet WordSet::parse(Universe universe, std::span<const std::string> words) {
  std::vector<std::uint64_t> packed;
  for (const std::string& text : words) {
    BitWord w = BitWord::parse(text);
    if (w.universe().size() != universe.size())
      throw std::invalid_argument("word '" + text + "' does not match the universe");
    std::uint64_t bits = 0;
    for (const std::string& label : universe) bits = (bits << 1) | static_cast<std::uint64_t>(w.bit(label));
    packed.push_back(bits);
  }
  return WordSet(std::move(universe), std::move(packed));
}

bool WordSet::contains(std::uint64_t bits) const {
  return std::binary_search(words_.begin(), words_.end(), bits);
}

bool WordSet::contains(const BitWord& word) const {
  if (word.universe() == universe_) return contains(word.bits());
  if (word.size() != universe_.size()) return false;
  std::uint64_t bits = 0;
  for (const std::string& label : universe_) {
    auto it = std::find(word.universe().begin(), word.universe().end(), label);
    if (it == word.universe().end()) return false;
    bits = (bits << 1) | static_cast<std::uint64_t>(word.bit(label));
  }
  return contains(bits);
}

std::vector<std::string> WordSet::to_strings() const {
  std::vector<std::string> out;
  out.reserve(words_.size());
  for (std::uint64_t w : words_) out.push_back(format_word(universe_, w));
  return out;
}

WordSet WordSet::reordered(const Universe& target) const {
  if (target.size() != universe_.size())
    throw std::invalid_argument("reordering must be a permutation of the universe");
  const std::size_t n = target.size();
  std::vector<std::size_t> source(n);
  for (std::size_t i = 0; i < n; ++i) source[i] = index_in(universe_, target[i]);
  std::vector<std::uint64_t> out;
  out.reserve(words_.size());
  for (std::uint64_t w : words_) {
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < n; ++i)
      bits = (bits << 1) | static_cast<std::uint64_t>(bit_at(w, n, source[i]));
    out.push_back(bits);
  }
  return WordSet(target, std::move(out), annihilated_);
}

WordSet full_set(const Universe& universe) {
  validate_universe(universe);
  require_enumerable(universe);
  const std::uint64_t count = std::uint64_t{1} << universe.size();
  std::vector<std::uint64_t> words(count);
  for (std::uint64_t w = 0; w < count; ++w) words[w] = w;
  return WordSet(universe, std::move(words));
}

WordSet traceless_set(const Universe& universe) {
  validate_universe(universe);
  require_enumerable(universe);
  if (universe.empty()) return WordSet(universe);
  const std::uint64_t count = (std::uint64_t{1} << universe.size()) - 1;
  std::vector<std::uint64_t> words(count);
  for (std::uint64_t w = 0; w < count; ++w) words[w] = w;
  return WordSet(universe, std::move(words));
}

BitWord all_ones(const Universe& universe) {
  return BitWord(universe, bit_mask(universe.size()));
}

WordSet complement_perp(const WordSet& j) {
  return set_difference(full_set(j.universe()), j);
}

WordSet complement_bar(const WordSet& j) {
  return set_difference(traceless_set(j.universe()), j);
}

WordSet set_union(const WordSet& a, const WordSet& b) {
  require_same_universe(a, b);
  std::vector<std::uint64_t> out;
  std::set_union(a.words().begin(), a.words().end(), b.words().begin(), b.words().end(),
                 std::back_inserter(out));
  return WordSet(a.universe(), std::move(out), a.annihilated() || b.annihilated());
}

WordSet set_intersection(const WordSet& a, const WordSet& b) {
  require_same_universe(a, b);
  std::vector<std::uint64_t> out;
  std::set_intersection(a.words().begin(), a.words().end(), b.words().begin(),
                        b.words().end(), std::back_inserter(out));
  return WordSet(a.universe(), std::move(out));
}

WordSet set_difference(const WordSet& a, const WordSet& b) {
  require_same_universe(a, b);
  std::vector<std::uint64_t> out;
  std::set_difference(a.words().begin(), a.words().end(), b.words().begin(),
                      b.words().end(), std::back_inserter(out));
  return WordSet(a.universe(), std::move(out));
}

bool is_subset(const WordSet& a, const WordSet& b) {
  require_same_universe(a, b);
  return std::includes(b.words().begin(), b.words().end(), a.words().begin(),
                       a.words().end());
}

WordSet concat(const WordSet& j, const WordSet& k) {
  Universe universe = j.universe();
  universe.insert(universe.end(), k.universe().begin(), k.universe().end());
  validate_universe(universe);
  const std::size_t shift = k.universe().size();
  std::vector<std::uint64_t> out;
  out.reserve(j.size() * k.size());
  // Both inputs are sorted, so the output is produced in sorted order.
  for (std::uint64_t a : j.words())
    for (std::uint64_t b : k.words()) out.push_back((a << shift) | b);
  return WordSet(std::move(universe), std::move(out), j.annihilated() || k.annihilated());
}

ContractionSpec::ContractionSpec(std::vector<LabelPair> pairs) : pairs_(std::move(pairs)) {
  std::set<std::string_view> used;
  for (const auto& [a, b] : pairs_) {
    if (a == b) throw std::invalid_argument("cannot contract '" + a + "' with itself");
    if (!used.insert(a).second || !used.insert(b).second)
      throw std::invalid_argument("contraction pairs overlap");
  }
}

ContractionSpec ContractionSpec::parse(std::string_view text) {
  std::vector<LabelPair> pairs;
  std::size_t pos = 0;
  const auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view item = trim(text.substr(pos, comma - pos));
    pos = comma + 1;
    if (item.empty()) continue;
    const std::size_t colon = item.find(':');
    if (colon == std::string_view::npos)
      throw std::invalid_argument("pair '" + std::string(item) + "' must look like A:B");
    std::string_view a = trim(item.substr(0, colon));
    std::string_view b = trim(item.substr(colon + 1));
    if (a.empty() || b.empty())
      throw std::invalid_argument("pair '" + std::string(item) + "' must look like A:B");
    pairs.emplace_back(std::string(a), std::string(b));
  }
  return ContractionSpec(std::move(pairs));
}

bool ContractionSpec::is_subset_of(const ContractionSpec& other) const {
  return std::all_of(pairs_.begin(), pairs_.end(), [&](const LabelPair& p) {
    return std::find(other.pairs_.begin(), other.pairs_.end(), p) != other.pairs_.end();
  });
}

std::string ContractionSpec::to_string() const {
  std::string out;
  for (const auto& [a, b] : pairs_) {
    if (!out.empty()) out += ',';
    out += a + ":" + b;
  }
  return out;
}

std::optional<BitWord> contract_word(const BitWord& word, std::string_view a,
                                     std::string_view b) {
  if (a == b) throw std::invalid_argument("cannot contract a label with itself");
  const std::size_t n = word.size();
  const std::size_t ia = index_in(word.universe(), a);
  const std::size_t ib = index_in(word.universe(), b);
  if (bit_at(word.bits(), n, ia) != bit_at(word.bits(), n, ib)) return std::nullopt;
  std::vector<std::size_t> drop{std::min(ia, ib), std::max(ia, ib)};
  Universe rest;
  for (std::size_t i = 0; i < n; ++i)
    if (i != ia && i != ib) rest.push_back(word.universe()[i]);
  return BitWord(std::move(rest), drop_positions(word.bits(), n, drop));
}

WordSet contract_set(const WordSet& set, const ContractionSpec& pairs) {
  const Universe& universe = set.universe();
  const std::size_t n = universe.size();
  std::vector<std::pair<std::size_t, std::size_t>> positions;
  std::vector<std::size_t> drop;
  for (const auto& [a, b] : pairs.pairs()) {
    positions.emplace_back(index_in(universe, a), index_in(universe, b));
    drop.push_back(positions.back().first);
    drop.push_back(positions.back().second);
  }
  std::sort(drop.begin(), drop.end());
  Universe rest;
  for (std::size_t i = 0, next = 0; i < n; ++i) {
    if (next < drop.size() && drop[next] == i) {
      ++next;
      continue;
    }
    rest.push_back(universe[i]);
  }
  bool annihilated = set.annihilated();
  std::vector<std::uint64_t> out;
  for (std::uint64_t w : set.words()) {
    const bool matched = std::all_of(positions.begin(), positions.end(), [&](const auto& p) {
      return bit_at(w, n, p.first) == bit_at(w, n, p.second);
    });
    if (!matched) {
      annihilated = true;
      continue;
    }
    out.push_back(drop_positions(w, n, drop));
  }
  return WordSet(std::move(rest), std::move(out), annihilated);
}

WordSet compose_sets(const WordSet& j, const WordSet& k, const ContractionSpec& h) {
  const auto in = [](const Universe& u, const std::string& label) {
    return std::find(u.begin(), u.end(), label) != u.end();
  };
  for (const auto& [a, b] : h.pairs()) {
    const bool split = (in(j.universe(), a) && in(k.universe(), b)) ||
                       (in(j.universe(), b) && in(k.universe(), a));
    if (!split)
      throw std::invalid_argument("composition pair " + a + ":" + b +
                                  " must link one label from each side");
  }
  return contract_set(concat(j, k), h);
}

}  // namespace hot

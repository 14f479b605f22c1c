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


#include "hot/string_calculus.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <stdexcept>
#include <unordered_map>

namespace hot {

namespace {

constexpr std::size_t kCacheLimit = 1 << 14;

class DCache {
 public:
  std::optional<WordSet> find(const std::string& key) {
    std::lock_guard lock(mutex_);
    auto it = sets_.find(key);
    if (it == sets_.end()) return std::nullopt;
    return it->second;
  }

  void insert(const std::string& key, const WordSet& set) {
    std::lock_guard lock(mutex_);
    if (sets_.size() >= kCacheLimit) sets_.clear();
    sets_.emplace(key, set);
  }

  void clear() {
    std::lock_guard lock(mutex_);
    sets_.clear();
  }

 private:
  std::mutex mutex_;
  std::unordered_map<std::string, WordSet> sets_;
};

DCache& cache() {
  static DCache instance;
  return instance;
}

WordSet build_uncached(const TypeExpr& x) {
  switch (x.kind()) {
    case TypeExpr::Kind::Trivial:
      return WordSet(Universe{});
    case TypeExpr::Kind::Elementary:
      return WordSet(Universe{x.label().name}, {0});
    case TypeExpr::Kind::Arrow:
      break;
  }
  const WordSet dl = build_D(x.left());
  const WordSet dr = build_D(x.right());
  return set_union(concat(full_set(dl.universe()), dr),
                   concat(complement_bar(dl), complement_perp(dr)));
}

bool in_D_packed(const TypeExpr& x, std::uint64_t w) {
  switch (x.kind()) {
    case TypeExpr::Kind::Trivial:
      return false;
    case TypeExpr::Kind::Elementary:
      return w == 0;
    case TypeExpr::Kind::Arrow:
      break;
  }
  const std::size_t nl = x.left().system_count();
  const std::size_t nr = x.right().system_count();
  const std::uint64_t wl = nr == 0 ? w : (w >> nr);
  const std::uint64_t wr = w & bit_mask(nr);
  if (in_D_packed(x.right(), wr)) return true;
  return wl != bit_mask(nl) && !in_D_packed(x.left(), wl);
}

std::size_t position_of(const Universe& universe, const std::string& label) {
  return index_in(universe, label);
}

}  // namespace

Universe universe_of(const TypeExpr& x) { return system_names(x); }

WordSet build_D(const TypeExpr& x) {
  if (!x.is_arrow()) return build_uncached(x);
  const std::string key = render_type(x);
  if (auto hit = cache().find(key)) return *std::move(hit);
  if (!has_unique_labels(x))
    throw std::invalid_argument("type has repeated labels; relabel it first");
  WordSet result = build_uncached(x);
  cache().insert(key, result);
  return result;
}

void clear_string_cache() { cache().clear(); }

bool in_D(const TypeExpr& x, std::uint64_t bits) {
  if ((bits & ~bit_mask(x.system_count())) != 0)
    throw std::invalid_argument("word has bits outside the type's universe");
  return in_D_packed(x, bits);
}

bool in_D(const TypeExpr& x, const BitWord& word) {
  const Universe universe = universe_of(x);
  if (word.universe() == universe) return in_D_packed(x, word.bits());
  if (word.size() != universe.size())
    throw std::invalid_argument("word '" + word.to_string() + "' is not over Ele_x");
  std::uint64_t bits = 0;
  for (const std::string& label : universe)
    bits = (bits << 1) | static_cast<std::uint64_t>(word.bit(label));
  return in_D_packed(x, bits);
}

WordSet tensor_D_closed_form(const TypeExpr& x, const TypeExpr& y) {
  const WordSet dx = build_D(x);
  const WordSet dy = build_D(y);
  const WordSet ex(dx.universe(), {all_ones(dx.universe()).bits()});
  const WordSet ey(dy.universe(), {all_ones(dy.universe()).bits()});
  return set_union(set_union(concat(ex, dy), concat(dx, ey)), concat(dx, dy));
}

ContractionSpec orient_pairs(const IoAnalysis& io, const ContractionSpec& h) {
  std::vector<LabelPair> oriented;
  for (const auto& [a, b] : h.pairs()) {
    for (const std::string& label : {a, b})
      if (!io.k.contains(label))
        throw std::invalid_argument("system '" + label + "' not in type");
    if (io.is_input(a) && io.is_output(b)) {
      oriented.emplace_back(a, b);
    } else if (io.is_output(a) && io.is_input(b)) {
      oriented.emplace_back(b, a);
    } else {
      throw std::invalid_argument("pair " + a + ":" + b +
                                  " must join an input with an output");
    }
  }
  return ContractionSpec(std::move(oriented));
}

WordSet critical_set(const TypeExpr& x, std::string_view a, std::string_view b) {
  const IoAnalysis io = io_partition(x);
  if (!io.is_input(a))
    throw std::invalid_argument("system '" + std::string(a) + "' is not an input");
  if (!io.is_output(b))
    throw std::invalid_argument("system '" + std::string(b) + "' is not an output");
  return critical_set_multi(x, ContractionSpec({{std::string(a), std::string(b)}}));
}

WordSet critical_set_multi(const TypeExpr& x, const ContractionSpec& h) {
  const IoAnalysis io = io_partition(x);
  const ContractionSpec oriented = orient_pairs(io, h);
  const Universe universe = universe_of(x);
  const std::size_t n = universe.size();

  std::set<std::string> contracted;
  for (const auto& [a, b] : oriented.pairs()) {
    contracted.insert(a);
    contracted.insert(b);
  }
  std::vector<std::size_t> free_inputs;
  std::uint64_t base = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (contracted.contains(universe[i])) continue;
    if (io.is_input(universe[i])) {
      free_inputs.push_back(i);
    } else {
      base = with_bit(base, n, i, 1);
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& [a, b] : oriented.pairs())
    pairs.emplace_back(position_of(universe, a), position_of(universe, b));

  if (free_inputs.size() + pairs.size() > kMaxEnumerated)
    throw std::length_error("critical set too large to enumerate");

  std::vector<std::uint64_t> words;
  const std::uint64_t patterns = std::uint64_t{1} << pairs.size();
  const std::uint64_t frees = std::uint64_t{1} << free_inputs.size();
  // The all-ones pattern is excluded: b ranges over T, not W.
  for (std::uint64_t p = 0; p + 1 < patterns; ++p) {
    std::uint64_t word = base;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      const int bit = static_cast<int>((p >> k) & 1U);
      word = with_bit(word, n, pairs[k].first, bit);
      word = with_bit(word, n, pairs[k].second, bit);
    }
    for (std::uint64_t f = 0; f < frees; ++f) {
      std::uint64_t w = word;
      for (std::size_t k = 0; k < free_inputs.size(); ++k)
        w = with_bit(w, n, free_inputs[k], static_cast<int>((f >> k) & 1U));
      words.push_back(w);
    }
  }
  return WordSet(universe, std::move(words));
}

}  // namespace hot

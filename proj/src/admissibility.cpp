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


#include "hot/admissibility.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "hot/string_calculus.hpp"

namespace hot {

namespace {

std::vector<std::string> label_names(const std::vector<Label>& labels) {
  std::vector<std::string> out;
  out.reserve(labels.size());
  for (const Label& l : labels) out.push_back(l.name);
  return out;
}

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const std::string& item : items) {
    if (!out.empty()) out += ",";
    out += item;
  }
  return out;
}

std::map<std::string, int, std::less<>> dims_of(const IoAnalysis& io) {
  std::map<std::string, int, std::less<>> out;
  for (const Label& l : io.elementary) out[l.name] = l.dim;
  return out;
}

// Unknown labels and unequal dimensions are usage errors, not verdicts.
void validate_pairs(const IoAnalysis& io, const ContractionSpec& h) {
  const auto dims = dims_of(io);
  for (const auto& [a, b] : h.pairs()) {
    for (const std::string& label : {a, b})
      if (!dims.contains(label))
        throw std::invalid_argument("system '" + label + "' not in type");
    if (dims.at(a) != dims.at(b))
      throw std::invalid_argument("cannot contract " + a + " (dimension " +
                                  std::to_string(dims.at(a)) + ") with " + b + " (dimension " +
                                  std::to_string(dims.at(b)) + ")");
  }
}

std::optional<Verdict> same_side_rejection(const IoAnalysis& io, const ContractionSpec& h) {
  for (const auto& [a, b] : h.pairs()) {
    if (io.is_input(a) && io.is_input(b))
      return Verdict{false, Reason::InputInput, std::nullopt, std::nullopt,
                     a + " and " + b + " are both inputs"};
    if (io.is_output(a) && io.is_output(b))
      return Verdict{false, Reason::OutputOutput, std::nullopt, std::nullopt,
                     a + " and " + b + " are both outputs"};
  }
  return std::nullopt;
}

IoSets remaining_io(const IoAnalysis& io, const ContractionSpec& h) {
  std::set<std::string, std::less<>> contracted;
  for (const auto& [a, b] : h.pairs()) {
    contracted.insert(a);
    contracted.insert(b);
  }
  IoSets out;
  for (const Label& l : io.inputs)
    if (!contracted.contains(l.name)) out.inputs.push_back(l.name);
  for (const Label& l : io.outputs)
    if (!contracted.contains(l.name)) out.outputs.push_back(l.name);
  return out;
}

TypeExpr rename_systems(const TypeExpr& t, const std::map<std::string, std::string>& names) {
  if (t.is_elementary()) {
    auto it = names.find(t.label().name);
    return it == names.end() ? t : TypeExpr::elementary(it->second, t.label().dim);
  }
  if (t.is_arrow())
    return TypeExpr::arrow(rename_systems(t.left(), names), rename_systems(t.right(), names));
  return t;
}

}  // namespace

std::string_view reason_name(Reason reason) {
  switch (reason) {
    case Reason::Ok:
      return "ok";
    case Reason::InputInput:
      return "input-input";
    case Reason::OutputOutput:
      return "output-output";
    case Reason::CriticalSetHit:
      return "critical-set-hit";
    case Reason::LabelMismatch:
      return "label-mismatch";
    case Reason::LambdaMismatch:
      return "lambda-mismatch";
    case Reason::NotIncluded:
      return "not-included";
  }
  return "unknown";
}

Verdict check_inclusion(const TypeExpr& x, const TypeExpr& y) {
  const IoAnalysis ix = io_partition(x);
  const IoAnalysis iy = io_partition(y);
  if (dims_of(ix) != dims_of(iy)) {
    return Verdict{false, Reason::LabelMismatch, std::nullopt, std::nullopt,
                   "systems {" + join(label_names(ix.elementary)) + "} vs {" +
                       join(label_names(iy.elementary)) + "}"};
  }
  if (ix.lambda != iy.lambda) {
    return Verdict{false, Reason::LambdaMismatch, std::nullopt, std::nullopt,
                   "lambda " + format_rational(ix.lambda) + " vs " + format_rational(iy.lambda)};
  }
  const Universe ux = universe_of(x);
  const Universe uy = universe_of(y);
  const std::size_t n = ux.size();
  std::vector<std::size_t> source(n);
  for (std::size_t i = 0; i < n; ++i) source[i] = index_in(ux, uy[i]);

  const WordSet dx = build_D(x);
  for (std::uint64_t w : dx.words()) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < n; ++i)
      v = (v << 1) | static_cast<std::uint64_t>(bit_at(w, n, source[i]));
    if (!in_D(y, v)) {
      BitWord witness(ux, w);
      return Verdict{false, Reason::NotIncluded, witness, std::nullopt,
                     witness.to_string() + " is in D_x but not in D_y"};
    }
  }
  return Verdict{true, Reason::Ok, std::nullopt,
                 IoSets{label_names(ix.inputs), label_names(ix.outputs)}, ""};
}

Verdict check_equivalence(const TypeExpr& x, const TypeExpr& y) {
  Verdict forward = check_inclusion(x, y);
  if (!forward.admissible) return forward;
  Verdict backward = check_inclusion(y, x);
  if (!backward.admissible) {
    backward.detail = "reverse inclusion fails: " + backward.detail;
    return backward;
  }
  return forward;
}

Verdict check_contraction(const TypeExpr& x, const ContractionSpec& h) {
  validate_pairs(io_partition(x), h);
  return check_contraction_strings(x, h);
}

Verdict check_contraction_strings(const TypeExpr& x, const ContractionSpec& h) {
  const IoAnalysis io = io_partition(x);
  if (auto rejected = same_side_rejection(io, h)) return *rejected;
  const ContractionSpec oriented = orient_pairs(io, h);
  const WordSet critical = critical_set_multi(x, oriented);
  // Words are sorted, so the first hit is the lexicographically smallest.
  for (std::uint64_t s : critical.words()) {
    if (in_D(x, s)) {
      BitWord witness(critical.universe(), s);
      return Verdict{false, Reason::CriticalSetHit, witness, std::nullopt,
                     witness.to_string() + " lies in D_x and in the critical set"};
    }
  }
  return Verdict{true, Reason::Ok, std::nullopt, remaining_io(io, oriented), ""};
}

CompositionSetup composition_setup(const TypeExpr& x, const TypeExpr& y) {
  const std::vector<Label> ex = elementary_systems(x);
  const std::vector<Label> ey = elementary_systems(y);
  std::set<std::string> taken;
  for (const Label& l : ex) taken.insert(l.name);
  for (const Label& l : ey) taken.insert(l.name);

  std::map<std::string, std::string> fresh;
  std::vector<LabelPair> pairs;
  CompositionSetup setup;
  for (const Label& ly : ey) {
    auto it = std::find_if(ex.begin(), ex.end(), [&](const Label& l) { return l.name == ly.name; });
    if (it == ex.end()) continue;
    if (it->dim != ly.dim)
      throw std::invalid_argument("shared system '" + ly.name + "' has dimension " +
                                  std::to_string(it->dim) + " on the left and " +
                                  std::to_string(ly.dim) + " on the right");
    std::string name;
    int suffix = 0;
    do {
      name = ly.name + std::to_string(++suffix);
    } while (taken.contains(name));
    taken.insert(name);
    fresh[ly.name] = name;
    pairs.emplace_back(ly.name, name);
    setup.renamed.push_back({ly.name, 1, name});
  }
  setup.product = tensor(x, rename_systems(y, fresh));
  setup.pairs = ContractionSpec(std::move(pairs));
  return setup;
}

Verdict check_composition(const TypeExpr& x, const TypeExpr& y) {
  const CompositionSetup setup = composition_setup(x, y);
  Verdict verdict = check_contraction(setup.product, setup.pairs);
  if (!setup.renamed.empty()) {
    std::string note = "right-hand copies renamed:";
    for (const Relabeling& r : setup.renamed) note += " " + r.original + "->" + r.fresh;
    verdict.detail = verdict.detail.empty() ? note : verdict.detail + "; " + note;
  }
  return verdict;
}

bool check_monotonicity(const TypeExpr& x, const ContractionSpec& h, const ContractionSpec& k) {
  const IoAnalysis io = io_partition(x);
  const auto oriented = [&](const ContractionSpec& spec) {
    std::vector<LabelPair> out;
    for (auto [a, b] : spec.pairs()) {
      if (io.is_output(a) && io.is_input(b)) std::swap(a, b);
      out.emplace_back(std::move(a), std::move(b));
    }
    return ContractionSpec(std::move(out));
  };
  if (!oriented(h).is_subset_of(oriented(k)))
    throw std::invalid_argument("monotonicity needs H to be a subset of K");
  const bool h_ok = check_contraction(x, h).admissible;
  const bool k_ok = check_contraction(x, k).admissible;
  return h_ok || !k_ok;
}

TypeExpr supermap_type(const TypeExpr& x, const ContractionSpec& h) {
  const IoAnalysis io = io_partition(x);
  validate_pairs(io, h);
  const ContractionSpec oriented = orient_pairs(io, h);
  const auto dims = dims_of(io);
  TypeExpr slots = TypeExpr::trivial();
  bool first = true;
  for (const auto& [in, out] : oriented.pairs()) {
    TypeExpr slot = TypeExpr::arrow(TypeExpr::elementary(out, dims.at(out)),
                                    TypeExpr::elementary(in, dims.at(in)));
    slots = first ? slot : tensor(std::move(slots), std::move(slot));
    first = false;
  }
  const IoSets rest = remaining_io(io, oriented);
  std::vector<Label> rest_in;
  std::vector<Label> rest_out;
  for (const std::string& name : rest.inputs) rest_in.push_back({name, dims.at(name)});
  for (const std::string& name : rest.outputs) rest_out.push_back({name, dims.at(name)});
  return TypeExpr::arrow(std::move(slots),
                         TypeExpr::arrow(tensor_of(rest_in), tensor_of(rest_out)));
}

Verdict supermap_inclusion_form(const TypeExpr& x, const ContractionSpec& h) {
  const IoAnalysis io = io_partition(x);
  validate_pairs(io, h);
  if (auto rejected = same_side_rejection(io, h)) return *rejected;
  const TypeExpr target = supermap_type(x, h);
  Verdict verdict = check_inclusion(x, target);
  if (verdict.admissible) verdict.result_io = remaining_io(io, orient_pairs(io, h));
  verdict.detail = verdict.detail.empty() ? "target " + render_type(target, true)
                                          : verdict.detail + "; target " + render_type(target, true);
  return verdict;
}

}  // namespace hot

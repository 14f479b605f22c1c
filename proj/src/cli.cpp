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


#include "hot/cli.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "hot/admissibility.hpp"
#include "hot/oracle.hpp"
#include "hot/report.hpp"
#include "hot/signalling.hpp"
#include "hot/string_calculus.hpp"

namespace hot {

namespace {

constexpr std::size_t kMaxListedWords = 64;
constexpr double kWitnessMargin = 1e-3;

struct Options {
  bool json = false;
  std::string dims_file;
  SystemTable systems;
};

// A parse failure on one type argument; carries the text for the caret line.
struct TypeTextError {
  std::string text;
  ParseError error;
};

TypeExpr read_type(const std::string& text, const Options& opt, Report& report) {
  TypeExpr x;
  try {
    x = parse_type(text, opt.systems);
  } catch (const ParseError& e) {
    throw TypeTextError{text, e};
  }
  if (!has_unique_labels(x)) {
    RelabelResult fixed = relabel_unique(x);
    for (const Relabeling& r : fixed.renamed)
      report.notes.push_back("renamed occurrence " + std::to_string(r.occurrence + 1) + " of " +
                             r.original + " to " + r.fresh);
    x = fixed.type;
  }
  report.input_types.push_back(render_type(x, true));
  return x;
}

std::string join(const std::vector<std::string>& items, std::string_view sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

std::string brace(const std::vector<std::string>& items) { return "{" + join(items, ", ") + "}"; }

std::string sci(double v) {
  std::ostringstream s;
  s << std::setprecision(3) << std::scientific << v;
  return s.str();
}

void print_notes(const Report& report, std::ostream& out) {
  for (const std::string& n : report.notes) out << "note: " << n << '\n';
}

void print_verdict(const Verdict& v, std::ostream& out) {
  out << "admissible: " << (v.admissible ? "yes" : "no") << '\n';
  if (!v.admissible) out << "reason:     " << reason_name(v.reason) << '\n';
  if (v.witness) out << "witness:    " << v.witness->to_string() << '\n';
  if (v.result_io)
    out << "result:     in " << brace(v.result_io->inputs) << ", out " << brace(v.result_io->outputs)
        << '\n';
  if (!v.detail.empty()) out << "detail:     " << v.detail << '\n';
}

// ---- analyze

int cmd_analyze(const std::string& text, const Options& opt, Report& report, std::ostream& out) {
  const TypeExpr x = read_type(text, opt, report);
  const IoAnalysis io = io_partition(x);
  const std::vector<std::string> systems = system_names(x);
  std::optional<WordSet> d;
  try {
    d = build_D(x);
  } catch (const std::length_error&) {
  }

  Json& b = report.body;
  b["systems"] = systems;
  b["inputs"] = oracle::names_of(io.inputs);
  b["outputs"] = oracle::names_of(io.outputs);
  b["lambda"] = format_rational(io.lambda);
  b["d_size"] = d ? Json(d->size()) : Json(nullptr);
  b["d_words"] = d && d->size() <= kMaxListedWords ? Json(d->to_strings()) : Json(nullptr);
  if (opt.json) return kExitOk;

  print_notes(report, out);
  out << "type:    " << report.input_types.front() << '\n';
  out << "systems: " << brace(systems) << '\n';
  out << "in:      " << brace(oracle::names_of(io.inputs)) << '\n';
  out << "out:     " << brace(oracle::names_of(io.outputs)) << '\n';
  out << "lambda:  " << format_rational(io.lambda) << '\n';
  if (!d) {
    out << "|D|:     too many systems to enumerate\n";
    return kExitOk;
  }
  out << "|D|:     " << d->size() << '\n';
  if (d->size() <= kMaxListedWords)
    for (const std::string& w : d->to_strings()) out << "  " << w << '\n';
  return kExitOk;
}

// ---- check

int cmd_check(const std::string& kind, const std::vector<std::string>& types, const std::string& pairs,
              const Options& opt, Report& report, std::ostream& out) {
  const bool binary = kind != "contraction";
  if (types.size() != (binary ? 2U : 1U))
    throw CLI::ValidationError("check " + kind + " takes " + (binary ? "two types" : "one type"));
  if (binary && !pairs.empty()) throw CLI::ValidationError("--pairs only applies to contraction");

  const TypeExpr x = read_type(types[0], opt, report);
  Verdict v;
  if (kind == "contraction") {
    const ContractionSpec h = ContractionSpec::parse(pairs);
    report.body["pairs"] = h.to_string();
    v = check_contraction(x, h);
  } else {
    const TypeExpr y = read_type(types[1], opt, report);
    if (kind == "inclusion") {
      v = check_inclusion(x, y);
    } else if (kind == "equivalence") {
      v = check_equivalence(x, y);
    } else {
      v = check_composition(x, y);
    }
  }
  report.body["verdict"] = to_json(v);
  if (!v.detail.empty()) report.body["detail"] = v.detail;
  if (!opt.json) {
    print_notes(report, out);
    print_verdict(v, out);
  }
  return v.admissible ? kExitOk : kExitRejected;
}

// ---- signalling

int cmd_signalling(const std::string& text, bool cross, const Options& opt, Report& report,
                   std::ostream& out) {
  const TypeExpr x = read_type(text, opt, report);
  std::vector<CrosscheckRow> rows;
  if (cross) {
    rows = crosscheck_rows(x);
  } else {
    for (SignallingVerdict& v : signalling_matrix(x)) rows.push_back({std::move(v), false, true});
  }
  const bool agree = std::all_of(rows.begin(), rows.end(), [](const CrosscheckRow& r) { return r.agrees; });

  Json table = Json::array();
  for (const CrosscheckRow& r : rows) {
    Json j = to_json(r.verdict);
    if (cross) {
      j["contraction_admissible"] = r.contraction_admissible;
      j["agrees"] = r.agrees;
    }
    table.push_back(std::move(j));
  }
  report.body["rows"] = std::move(table);
  if (cross) report.body["crosscheck"] = agree;
  if (opt.json) return agree ? kExitOk : kExitRejected;

  print_notes(report, out);
  std::size_t wf = 4, wt = 2, wr = 8, we = 9;
  for (const CrosscheckRow& r : rows) {
    we = std::max(we, render_type(r.verdict.enclosing, true).size());
    wf = std::max(wf, r.verdict.from.size());
    wt = std::max(wt, r.verdict.to.size());
    wr = std::max(wr, relation_name(r.verdict.relation).size());
  }
  const auto cell = [&](std::string_view s, std::size_t w) {
    out << s << std::string(w - s.size() + 2, ' ');
  };
  cell("from", wf);
  cell("to", wt);
  cell("relation", wr);
  if (cross) {
    cell("enclosing", we);
    out << "crosscheck";
  } else {
    out << "enclosing";
  }
  out << '\n';
  for (const CrosscheckRow& r : rows) {
    cell(r.verdict.from, wf);
    cell(r.verdict.to, wt);
    cell(relation_name(r.verdict.relation), wr);
    const std::string enclosing = render_type(r.verdict.enclosing, true);
    if (cross) {
      cell(enclosing, we);
      out << (r.agrees ? "ok" : "DISAGREES");
    } else {
      out << enclosing;
    }
    out << '\n';
  }
  if (rows.empty()) out << "(no input/output pairs)\n";
  if (cross) out << "crosscheck: " << (agree ? "ok" : "FAILED") << '\n';
  return agree ? kExitOk : kExitRejected;
}

// ---- oracle verify

struct TrialResult {
  bool passed = true;
  double residual = 0;
};

template <typename Fn>
std::vector<TrialResult> run_trials(std::size_t trials, Fn&& fn) {
  std::vector<TrialResult> results(trials);
  std::atomic<std::size_t> next{0};
  const std::size_t workers =
      std::min<std::size_t>(trials, std::max(1U, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < trials; i = next++) results[i] = fn(i);
    });
  for (std::thread& t : pool) t.join();
  return results;
}

int cmd_oracle(const std::string& text, const std::string& pairs, std::size_t trials,
               std::uint64_t seed, double tol, const Options& opt, Report& report,
               std::ostream& out) {
  using namespace hot::oracle;
  const TypeExpr x = read_type(text, opt, report);
  report.seed = seed;
  const IoAnalysis io = io_partition(x);
  const std::vector<std::string> inputs = names_of(io.inputs);
  const std::vector<std::string> outputs = names_of(io.outputs);
  dimension_of(io.elementary);

  // Static checks: lambda against the trace of the centre and the basis size.
  const Matrix<double> centre = sample_deterministic<double>(x, seed, 0.0).data;
  double d_in = 1;
  for (const Label& l : io.inputs) d_in *= l.dim;
  const double trace_error = std::abs(centre.trace().real() - d_in);
  const std::size_t basis = delta_basis<double>(x).elements.size();
  const std::uint64_t expected_basis = delta_dimension(x);
  bool agree = trace_error <= tol && basis == expected_basis;

  Json& b = report.body;
  b["trials"] = trials;
  b["tol"] = tol;
  b["lambda"] = format_rational(io.lambda);
  b["lambda_trace_error"] = trace_error;
  b["basis_dimension"] = basis;
  b["expected_basis_dimension"] = expected_basis;

  std::vector<std::uint64_t> seeds(trials);
  Rng rng(seed);
  for (std::uint64_t& s : seeds) s = rng.next();

  std::optional<Verdict> verdict;
  std::optional<ViolationWitness<double>> witness;
  std::vector<TrialResult> results;
  std::size_t nosignalling_rows = 0;
  if (!pairs.empty()) {
    const ContractionSpec h = ContractionSpec::parse(pairs);
    b["pairs"] = h.to_string();
    verdict = check_contraction(x, h);
    b["verdict"] = to_json(*verdict);
    if (verdict->admissible) {
      const IoSets& rio = *verdict->result_io;
      results = run_trials(trials, [&](std::size_t i) {
        const auto c = numeric_contraction(sample_deterministic<double>(x, seeds[i], 1.0), h);
        const ChannelReport<double> r = channel_report(c, rio.inputs, rio.outputs);
        return TrialResult{r.ok(tol), std::max({-r.min_eigenvalue, r.trace_residual, r.hermiticity})};
      });
    } else {
      witness = violation_witness<double>(x, h);
      const bool member = membership<double>(x, witness->map, tol);
      const bool channel = is_channel<double>(witness->contracted, witness->inputs, witness->outputs, tol);
      agree = agree && member && !channel && witness->margin >= kWitnessMargin;
      b["witness"] = {{"word", witness->word.to_string()},
                      {"epsilon", witness->epsilon},
                      {"member", member},
                      {"contracted_is_channel", channel},
                      {"margin", witness->margin}};
    }
  } else {
    std::vector<SignallingVerdict> quiet;
    for (SignallingVerdict& row : signalling_matrix(x))
      if (row.relation == Relation::NoSignalling) quiet.push_back(std::move(row));
    nosignalling_rows = quiet.size();
    results = run_trials(trials, [&](std::size_t i) {
      const auto r = sample_deterministic<double>(x, seeds[i], 1.0);
      const MembershipReport<double> m = membership_report(x, r);
      TrialResult t{m.ok(tol), std::max({-m.min_eigenvalue, m.hermiticity, m.identity_error, m.residual})};
      if (!outputs.empty()) {
        const ChannelReport<double> c = channel_report(r, inputs, outputs);
        t.passed = t.passed && c.ok(tol);
        t.residual = std::max({t.residual, -c.min_eigenvalue, c.trace_residual, c.hermiticity});
      }
      for (const SignallingVerdict& row : quiet) {
        const double ns = nosignalling_residual(r, outputs, row.from, row.to);
        t.passed = t.passed && ns <= tol;
        t.residual = std::max(t.residual, ns);
      }
      return t;
    });
    b["nosignalling_rows"] = nosignalling_rows;
  }

  std::size_t passed = 0;
  double worst = 0;
  for (const TrialResult& r : results) {
    passed += r.passed;
    worst = std::max(worst, r.residual);
  }
  agree = agree && passed == results.size();
  if (!witness) {
    b["passed"] = passed;
    b["worst_residual"] = worst;
  }
  b["agreement"] = agree;
  if (opt.json) return agree ? kExitOk : kExitRejected;

  print_notes(report, out);
  out << "type:      " << report.input_types.front() << '\n';
  out << "lambda:    " << format_rational(io.lambda) << " (trace error " << sci(trace_error) << ")\n";
  out << "basis:     " << basis << " (expected " << expected_basis << ")\n";
  if (verdict) {
    out << "pairs:     " << b["pairs"].get<std::string>() << '\n';
    print_verdict(*verdict, out);
  } else {
    out << "checks:    membership, channel, " << nosignalling_rows << " no-signalling row(s)\n";
  }
  if (witness) {
    out << "witness map: lambda I + " << witness->epsilon << " T[" << witness->word.to_string()
        << "], margin " << sci(witness->margin) << '\n';
  } else {
    out << "trials:    " << passed << "/" << results.size() << " pass, worst residual " << sci(worst)
        << '\n';
  }
  out << "agreement: " << (agree ? "yes" : "NO") << '\n';
  return agree ? kExitOk : kExitRejected;
}

void print_caret(const TypeTextError& e, std::ostream& err) {
  err << "hotc: parse error: " << e.error.what() << '\n';
  err << "  " << e.text << '\n';
  err << "  " << std::string(std::min(e.error.position(), e.text.size()), ' ') << "^\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Type checker for higher-order quantum maps", "hotc"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.json, "Print a JSON report");
  app.add_option("--dims", opt.dims_file, "File of 'Label = dimension' lines");

  std::string type_a;
  std::vector<std::string> types;
  std::string pairs;
  bool cross = false;
  std::size_t trials = 50;
  std::uint64_t seed = 1;
  double tol = 1e-9;

  CLI::App* analyze = app.add_subcommand("analyze", "Inputs, outputs, normalization and D_x");
  analyze->add_option("type", type_a, "Type expression")->required();

  CLI::App* check = app.add_subcommand("check", "Decide inclusion or admissibility");
  check->require_subcommand(1);
  std::string check_kind;
  for (const char* kind : {"inclusion", "equivalence", "contraction", "composition"}) {
    CLI::App* sub = check->add_subcommand(kind);
    sub->add_option("types", types, "Type expressions")->required();
    sub->callback([&check_kind, kind] { check_kind = kind; });
    if (std::string_view(kind) == "contraction") {
      sub->add_option("--pairs", pairs, "Pairs to contract, e.g. A:B,C:D")->required();
    }
  }

  CLI::App* signalling = app.add_subcommand("signalling", "Input to output signalling matrix");
  signalling->add_option("type", type_a, "Type expression")->required();
  signalling->add_flag("--crosscheck", cross, "Re-derive each row through critical sets");

  CLI::App* oracle = app.add_subcommand("oracle", "Numerical cross-checks on Choi operators");
  oracle->require_subcommand(1);
  CLI::App* verify = oracle->add_subcommand("verify", "Sample maps of a type and test them");
  verify->add_option("type", type_a, "Type expression")->required();
  verify->add_option("--pairs", pairs, "Contraction to test");
  verify->add_option("--trials", trials, "Number of samples")->capture_default_str();
  verify->add_option("--seed", seed, "Sampling seed")->capture_default_str();
  verify->add_option("--tol", tol, "Numerical tolerance")->capture_default_str()->check(
      CLI::PositiveNumber);

  std::vector<const char*> argv{"hotc"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  Report report;
  const auto start = std::chrono::steady_clock::now();
  int code = kExitOk;
  try {
    if (opt.dims_file.empty())
      if (const char* env = std::getenv(std::string(kDimsEnv).c_str()); env && *env)
        opt.dims_file = env;
    if (!opt.dims_file.empty()) opt.systems = load_system_table(opt.dims_file);

    if (analyze->parsed()) {
      report.command = "analyze";
      code = cmd_analyze(type_a, opt, report, out);
    } else if (check->parsed()) {
      report.command = "check " + check_kind;
      code = cmd_check(check_kind, types, pairs, opt, report, out);
    } else if (signalling->parsed()) {
      report.command = "signalling";
      code = cmd_signalling(type_a, cross, opt, report, out);
    } else {
      report.command = "oracle verify";
      code = cmd_oracle(type_a, pairs, trials, seed, tol, opt, report, out);
    }
  } catch (const TypeTextError& e) {
    print_caret(e, err);
    return kExitUsage;
  } catch (const CLI::Error& e) {
    err << "hotc: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "hotc: " << e.what() << '\n';
    return kExitUsage;
  }
  report.timing_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (opt.json) out << report.to_json().dump(2) << '\n';
  return code;
}

}  // namespace hot

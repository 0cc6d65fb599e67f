/* Copyright 2026 The qn4 Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

// qn4: command-line front end.
//
// Exit codes: 0 every check passed, 1 some check failed, 2 usage or I/O
// error. Reports go to stdout as JSON Lines unless noted; diagnostics go to
// stderr.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qn4/algebra_io.hpp"
#include "qn4/canonical.hpp"
#include "qn4/catalog.hpp"
#include "qn4/enumerate.hpp"
#include "qn4/proof_io.hpp"
#include "qn4/suites.hpp"
#include "qn4/twist.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace qn4;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

// A usage or I/O problem; main maps it to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const json& j) { std::cout << j.dump() << '\n'; }

FiniteAlgebra load_algebra(const std::string& path) {
  const AnyAlgebra any = any_from_json(read_json(path));
  if (!std::holds_alternative<FiniteAlgebra>(any))
    throw UsageError(path + ": expected a FiniteAlgebra file (with neg, without box)");
  return std::get<FiniteAlgebra>(any);
}

NuclearBrouwerian load_base(const std::string& path) {
  const AnyAlgebra any = any_from_json(read_json(path));
  if (!std::holds_alternative<NuclearBrouwerian>(any))
    throw UsageError(path + ": expected a nuclear Brouwerian file (with box)");
  return std::get<NuclearBrouwerian>(any);
}

Assignment parse_assignment(const std::vector<std::string>& items) {
  Assignment v;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("bad assignment '" + item + "', expected NAME=VALUE");
    try {
      v[item.substr(0, eq)] = static_cast<Element>(std::stoul(item.substr(eq + 1)));
    } catch (const std::logic_error&) {
      throw UsageError("bad value in '" + item + "'");
    }
  }
  return v;
}

std::size_t default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

int report_suites(const std::vector<SuiteResult>& results, bool timing) {
  bool ok = true;
  for (const auto& r : results) {
    write_report(std::cout, r, timing);
    ok = ok && r.passed();
  }
  return ok ? kPass : kFail;
}

json composite_json(const CompositeReport& c) {
  json items = json::array();
  for (const auto& item : c.items) items.push_back(to_json(item));
  return {{"subject", c.subject}, {"passed", c.passed()}, {"violated", c.violated()}, {"items", items}};
}

void write_twists(const std::vector<TwistStructure>& twists, const std::optional<std::string>& out) {
  std::set<CanonicalKey> classes;
  for (std::size_t k = 0; k < twists.size(); ++k) {
    const auto& t = twists[k];
    classes.insert(canonical_key(t.algebra));
    json carrier = json::array();
    for (const auto& [a1, a2] : t.carrier) carrier.push_back({a1, a2});
    char name[32];
    std::snprintf(name, sizeof name, "twist_%03zu.json", k);
    if (out) {
      fs::create_directories(*out);
      write_json(fs::path(*out) / name, to_json(t.algebra));
      std::cout << name << "  size " << t.carrier.size() << "  carrier " << carrier.dump() << '\n';
    } else {
      emit({{"index", k}, {"carrier", carrier}, {"algebra", to_json(t.algebra)}});
    }
  }
  if (out)
    std::cout << twists.size() << " twist structures, " << classes.size() << " up to isomorphism\n";
  else
    emit({{"summary", true}, {"twists", twists.size()}, {"isomorphism_classes", classes.size()}});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Proof checking and finite-model verification for the logic QN4"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "qn4 0.1.0");

  std::size_t jobs = default_jobs();
  bool timing = false;
  app.add_option("--jobs,-j", jobs, "Worker threads for parallel suites (default: available cores)")
      ->check(CLI::PositiveNumber);
  app.add_flag("--timing", timing, "Include wall-clock seconds in summary records");

  int code = kPass;

  // parse
  auto* parse_cmd = app.add_subcommand("parse", "Parse a formula and print its core and extended forms");
  std::string formula_text;
  parse_cmd->add_option("formula", formula_text, "Formula in ASCII or Unicode syntax")->required();
  parse_cmd->callback([&] {
    const Formula core = parse(formula_text);
    const Formula ext = parse_extended(formula_text);
    emit({{"input", formula_text},
          {"formula", render(core)},
          {"extended", render(ext)},
          {"depth", core.depth()},
          {"size", core.size()},
          {"variables", variables(core)}});
  });

  // check-proof
  auto* check_cmd = app.add_subcommand("check-proof", "Check a proof file");
  std::string proof_path;
  check_cmd->add_option("file", proof_path, "Proof JSON file")->required()->check(CLI::ExistingFile);
  check_cmd->callback([&] {
    const Proof p = proof_from_json(read_json(proof_path));
    const ProofReport r = check_proof(p);
    json j = to_json(r);
    j["file"] = proof_path;
    j["sequent"] = sequent(p);
    emit(j);
    code = r.accepted ? kPass : kFail;
  });

  // derive deduction
  auto* derive_cmd = app.add_subcommand("derive", "Proof transformations");
  derive_cmd->require_subcommand(1);
  auto* deduction_cmd = derive_cmd->add_subcommand("deduction", "Discharge a premise; prints the new proof");
  std::string discharge_text;
  std::optional<std::string> derive_out;
  deduction_cmd->add_option("file", proof_path, "Proof JSON file")->required()->check(CLI::ExistingFile);
  deduction_cmd->add_option("--discharge", discharge_text, "Premise to discharge")->required();
  deduction_cmd->add_option("--out,-o", derive_out, "Write the proof here instead of stdout");
  deduction_cmd->callback([&] {
    const Proof p = proof_from_json(read_json(proof_path));
    const ProofReport before = check_proof(p);
    if (!before.accepted) {
      json j = to_json(before);
      j["file"] = proof_path;
      emit(j);
      code = kFail;
      return;
    }
    const Proof d = deduction(p, parse(discharge_text));
    const ProofReport after = check_proof(d);
    if (derive_out) {
      write_json(*derive_out, to_json(d));
      json j = to_json(after);
      j["sequent"] = sequent(d);
      j["steps"] = d.steps.size();
      j["out"] = *derive_out;
      emit(j);
    } else {
      std::cout << to_json(d).dump(2) << '\n';
    }
    code = after.accepted ? kPass : kFail;
  });

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a formula in a finite algebra");
  std::string algebra_path;
  std::vector<std::string> assign_items;
  eval_cmd->add_option("algebra", algebra_path, "Algebra JSON file")->required()->check(CLI::ExistingFile);
  eval_cmd->add_option("formula", formula_text, "Formula")->required();
  eval_cmd->add_option("--assign,-a", assign_items, "Variable values as NAME=ELEMENT");
  eval_cmd->callback([&] {
    const FiniteAlgebra a = load_algebra(algebra_path);
    const Formula f = parse(formula_text);
    const Assignment v = parse_assignment(assign_items);
    for (const auto& [name, e] : v)
      if (e >= a.size) throw UsageError("element " + std::to_string(e) + " out of range for " + name);
    json vj = json::object();
    for (const auto& [name, e] : v) vj[name] = e;
    emit({{"formula", render(f)}, {"assignment", vj}, {"value", eval(a, f, v)}});
  });

  // check-eq
  auto* eq_cmd = app.add_subcommand("check-eq", "Check an equation, or a quasi-equation with --if, exhaustively");
  std::string equation_text;
  std::vector<std::string> antecedent_texts;
  eq_cmd->add_option("algebra", algebra_path, "Algebra JSON file")->required()->check(CLI::ExistingFile);
  eq_cmd->add_option("equation", equation_text, "Equation 'lhs = rhs'")->required();
  eq_cmd->add_option("--if", antecedent_texts, "Antecedent equation (repeatable)");
  eq_cmd->callback([&] {
    const FiniteAlgebra a = load_algebra(algebra_path);
    const Equation e = parse_equation(equation_text);
    CheckReport r;
    if (antecedent_texts.empty()) {
      r = check_equation(a, e, render(e));
    } else {
      QuasiEquation q{{}, e};
      std::string law;
      for (const auto& t : antecedent_texts) {
        q.antecedents.push_back(parse_equation(t));
        law += (law.empty() ? "" : ", ") + render(q.antecedents.back());
      }
      r = check_quasiequation(a, q, law + " => " + render(e));
    }
    emit(to_json(r));
    code = r.passed ? kPass : kFail;
  });

  // check-qn4
  auto* qn4_cmd = app.add_subcommand("check-qn4", "Decide whether an algebra is a QN4-lattice");
  bool equational = false, relational = false;
  qn4_cmd->add_option("algebra", algebra_path, "Algebra JSON file")->required()->check(CLI::ExistingFile);
  auto* eq_flag = qn4_cmd->add_flag("--equational", equational, "Use the equational presentation");
  qn4_cmd->add_flag("--relational", relational, "Use the order-theoretic definition (default)")->excludes(eq_flag);
  qn4_cmd->callback([&] {
    const FiniteAlgebra a = load_algebra(algebra_path);
    CompositeReport c = equational ? is_qn4_equational(a) : is_qn4_relational(a);
    c.subject = algebra_path;
    json j = composite_json(c);
    j["method"] = equational ? "equational" : "relational";
    if (c.passed()) {
      j["n4"] = is_n4(a).passed;
      j["quasi_nelson"] = is_quasi_nelson(a).passed;
    }
    emit(j);
    code = c.passed() ? kPass : kFail;
  });

  // twist
  auto* twist_cmd = app.add_subcommand("twist", "Twist structures over nuclear Brouwerian algebras");
  twist_cmd->require_subcommand(1);
  auto* build_cmd = twist_cmd->add_subcommand("build", "Build the full twist or its twist subalgebras");
  std::string base_path;
  bool full = false, subalgebras = false;
  std::size_t twist_bound = 16;
  std::optional<std::string> out_dir;
  build_cmd->add_option("base", base_path, "Nuclear Brouwerian JSON file")->required()->check(CLI::ExistingFile);
  auto* full_flag = build_cmd->add_flag("--full", full, "The whole product B x B");
  build_cmd->add_flag("--subalgebras", subalgebras, "Every twist subalgebra of the fiber (default)")
      ->excludes(full_flag);
  build_cmd->add_option("--bound", twist_bound, "Largest fiber enumerated")->capture_default_str();
  build_cmd->add_option("--out,-o", out_dir, "Write algebra files here and print a text report");
  build_cmd->callback([&] {
    const NuclearBrouwerian b = load_base(base_path);
    if (full) {
      const FiniteAlgebra a = full_twist(b);
      if (out_dir) {
        fs::create_directories(*out_dir);
        write_json(fs::path(*out_dir) / "full_twist.json", to_json(a));
        std::cout << "full_twist.json  size " << a.size << '\n';
      } else {
        emit({{"full", true}, {"algebra", to_json(a)}});
      }
      return;
    }
    try {
      write_twists(twist_subalgebras(b, true, twist_bound), out_dir);
    } catch (const TwistError& e) {
      throw UsageError(std::string(e.what()) + " (raise --bound)");
    }
  });

  auto* represent_cmd = twist_cmd->add_subcommand("represent", "Represent a QN4-lattice as a twist structure");
  represent_cmd->add_option("algebra", algebra_path, "Algebra JSON file")->required()->check(CLI::ExistingFile);
  represent_cmd->add_option("--out,-o", out_dir, "Write base.json and twist.json here");
  represent_cmd->callback([&] {
    const FiniteAlgebra a = load_algebra(algebra_path);
    try {
      const Representation r = represent(a);
      if (out_dir) {
        fs::create_directories(*out_dir);
        write_json(fs::path(*out_dir) / "base.json", to_json(r.quotient.algebra));
        write_json(fs::path(*out_dir) / "twist.json", to_json(r.twist.algebra));
      }
      std::cout << "B(A) has " << r.quotient.algebra.size << " elements; iota is an isomorphism onto a twist "
                << "structure with " << r.twist.carrier.size() << " pairs\n";
      for (std::size_t x = 0; x < a.size; ++x) {
        const auto [p1, p2] = r.twist.carrier[r.iota[x]];
        std::cout << "  " << x << " -> <" << p1 << ", " << p2 << ">\n";
      }
    } catch (const TwistError& e) {
      std::cout << "not representable: " << e.what() << '\n';
      code = kFail;
    } catch (const QuotientError& e) {
      std::cout << "not representable: " << e.what() << '\n';
      code = kFail;
    }
  });

  // zoo
  auto* zoo_cmd = app.add_subcommand("zoo", "Enumerate and verify the model zoo");
  zoo_cmd->require_subcommand(1);
  auto* zoo_build = zoo_cmd->add_subcommand("build", "Enumerate bases and twist structures to a directory");
  std::size_t base_size = 4;
  std::string zoo_dir;
  zoo_build->add_option("--base-size", base_size, "Largest base lattice")->capture_default_str();
  zoo_build->add_option("--bound", twist_bound, "Largest fiber per base")->capture_default_str();
  zoo_build->add_option("--out,-o", zoo_dir, "Output directory")->required();
  zoo_build->callback([&] {
    ModelZoo zoo;
    try {
      zoo = build_zoo(base_size, twist_bound);
    } catch (const BoundExceeded& e) {
      throw UsageError(e.what());
    }
    save_zoo(zoo, zoo_dir);
    std::size_t qn4 = 0, n4 = 0, qn = 0;
    for (const auto& m : zoo.models) {
      qn4 += m.qn4;
      n4 += m.n4;
      qn += m.quasi_nelson;
    }
    emit({{"out", zoo_dir},
          {"bases", zoo.bases.size()},
          {"models", zoo.models.size()},
          {"carriers", zoo.carrier_count},
          {"qn4", qn4},
          {"n4", n4},
          {"quasi_nelson", qn}});
  });

  auto* zoo_verify = zoo_cmd->add_subcommand("verify", "Run verification suites over a saved zoo");
  std::vector<std::string> suites;
  std::optional<std::string> witness_dir;
  zoo_verify->add_option("dir", zoo_dir, "Zoo directory")->required()->check(CLI::ExistingDirectory);
  zoo_verify->add_option("--suite,-s", suites, "Suite name (repeatable; default all)")
      ->check(CLI::IsMember(suite_names()));
  zoo_verify->add_option("--witness-dir", witness_dir, "Where failing checks write witnesses (default DIR/witnesses)");
  zoo_verify->callback([&] {
    const SuiteInput input = suite_input(load_zoo(zoo_dir));
    const SuiteOptions opt{jobs, timing, witness_dir ? fs::path(*witness_dir) : fs::path(zoo_dir) / "witnesses"};
    std::vector<SuiteResult> results;
    for (const auto& s : suites.empty() ? suite_names() : suites) results.push_back(run_suite(s, input, opt));
    code = report_suites(results, timing);
  });

  // suite
  auto* suite_cmd = app.add_subcommand("suite", "Build a zoo in memory and run suites over it");
  std::uint64_t seed = 1;
  std::size_t mutants = 0;
  suite_cmd->add_option("names", suites, "Suite names (default all)")->check(CLI::IsMember(suite_names()));
  suite_cmd->add_option("--base-size", base_size, "Largest base lattice")->capture_default_str();
  suite_cmd->add_option("--bound", twist_bound, "Largest fiber per base")->capture_default_str();
  suite_cmd->add_option("--mutants", mutants, "Also check this many seeded table mutants")->capture_default_str();
  suite_cmd->add_option("--seed", seed, "Seed for the mutant generator")->capture_default_str();
  suite_cmd->add_option("--witness-dir", witness_dir, "Where failing checks write witnesses");
  suite_cmd->callback([&] {
    ModelZoo zoo;
    try {
      zoo = build_zoo(base_size, twist_bound);
    } catch (const BoundExceeded& e) {
      throw UsageError(e.what());
    }
    const SuiteInput input = suite_input(zoo);
    const SuiteOptions opt{jobs, timing, witness_dir ? fs::path(*witness_dir) : fs::path()};
    std::vector<SuiteResult> results;
    for (const auto& s : suites.empty() ? suite_names() : suites) results.push_back(run_suite(s, input, opt));
    if (mutants > 0) results.push_back(run_mutants(input, MutantOptions{seed, mutants}, opt));
    code = report_suites(results, timing);
  });

  // catalog
  auto* catalog_cmd = app.add_subcommand("catalog", "List or export the builtin derivations");
  std::optional<std::string> entry_name;
  catalog_cmd->add_option("name", entry_name, "Print this derivation as a proof file");
  catalog_cmd->callback([&] {
    if (entry_name) {
      const CatalogEntry* e = find_derivation(*entry_name);
      if (!e) throw UsageError("no derivation named '" + *entry_name + "'");
      std::cout << to_json(e->proof).dump(2) << '\n';
      return;
    }
    for (const auto& e : builtin_derivations())
      emit({{"name", e.name}, {"origin", origin_name(e.origin)}, {"steps", e.proof.steps.size()},
            {"sequent", sequent(e.proof)}});
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "qn4: parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "qn4: " << e.what() << '\n';
    return kUsage;
  } catch (const ProofFormatError& e) {
    std::cerr << "qn4: bad proof file: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "qn4: " << e.what() << '\n';
    return kUsage;
  }
  return code;
}

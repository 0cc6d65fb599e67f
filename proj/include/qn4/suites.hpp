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

// Verification suites over a model zoo. A run yields one JSON record per
// check followed by a summary record; records carry no timestamps unless
// timing is requested, so identical inputs give byte-identical reports.
//
//   axioms          E(Ax1..Ax22) on every model, plus the first-component
//                   identities of Ax9..Ax22 on twist models
//   mp              E(a), E(a -> b) imply E(b)
//   translation     axiom equations, reflexivity, antisymmetry and MP
//                   closure of E, plus the QN4 identities
//   qn4             relational and equational checks agree and pass; the
//                   recorded N4 / quasi-Nelson flags are right
//   representation  iota is an isomorphism onto a twist structure
//   fiber           twist operations preserve the fiber of every base
//   separation      a non-involutive and a non-explosive model exist
//   catalog         every builtin derivation checks and is sound on the zoo
//
// run_mutants is the seeded negative-test generator: it corrupts zoo models
// and asks the relational and equational QN4 checks to agree on each mutant.

#ifndef QN4_SUITES_HPP_
#define QN4_SUITES_HPP_

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "qn4/enumerate.hpp"

namespace qn4 {

struct Subject {
  std::string id;
  FiniteAlgebra algebra;
  std::optional<TwistStructure> twist;
  std::optional<bool> n4;
  std::optional<bool> quasi_nelson;
};

struct SuiteInput {
  std::vector<Subject> models;
  std::vector<NuclearBrouwerian> bases;
};

// The QN4-flagged models of the zoo, named model_NNN after their index.
SuiteInput suite_input(const ModelZoo& zoo);

struct SuiteOptions {
  std::size_t jobs = 1;
  bool timing = false;
  // Where failing checks write their witness; empty means nowhere.
  std::filesystem::path witness_dir;
};

struct SuiteResult {
  std::string suite;
  std::vector<nlohmann::json> records;
  std::size_t subjects = 0;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::uint64_t assignments = 0;
  double seconds = 0;

  bool passed() const { return failures == 0; }
  nlohmann::json summary(bool timing) const;
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

// Throws std::invalid_argument for an unknown suite name.
SuiteResult run_suite(const std::string& name, const SuiteInput& input, const SuiteOptions& options = {});

struct MutantOptions {
  std::uint64_t seed = 1;
  std::size_t count = 10000;
  std::size_t max_size = 4;     // only models this small are mutated
  std::size_t max_changes = 3;  // table cells changed per mutant
};

// One record per mutant; suite name "mutants". Throws std::invalid_argument
// when no model is small enough.
SuiteResult run_mutants(const SuiteInput& input, const MutantOptions& mutants, const SuiteOptions& options = {});

// JSON Lines: the check records, then the summary.
void write_report(std::ostream& out, const SuiteResult& r, bool timing);

}  // namespace qn4

#endif  // QN4_SUITES_HPP_

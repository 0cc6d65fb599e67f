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

// Seeded generators for property tests: formulas, checking proofs and
// operation-table mutants. Everything is a function of the mt19937_64 state.

#ifndef QN4_RANDOM_HPP_
#define QN4_RANDOM_HPP_

#include <random>
#include <string>
#include <vector>

#include "qn4/algebra.hpp"
#include "qn4/hilbert.hpp"

namespace qn4 {

using Rng = std::mt19937_64;

struct FormulaShape {
  std::size_t max_depth = 8;
  std::vector<std::string> variables{"p", "q", "r", "s"};
  bool derived = false;  // also emit <->, =>, <=>, |.|
};

Formula random_formula(Rng& rng, const FormulaShape& shape = {});

struct RandomProof {
  Proof proof;         // passes check_proof
  Formula discharged;  // one of proof.premises
};

// A forward-generated proof whose lines have MP depth at most max_depth
// (premises, axioms and Lemma 1.1 lines have depth 0). It mixes axiom
// instances, directional axioms, Lemma 1.1/1.2 lines and MP, and has at
// least one premise.
RandomProof random_proof(Rng& rng, std::size_t max_depth = 6);

// `a` with 1..max_changes table cells (meet, join, imp or neg) replaced by
// random in-range values. The result may be any algebra at all.
FiniteAlgebra mutate(const FiniteAlgebra& a, Rng& rng, std::size_t max_changes = 3);

}  // namespace qn4

#endif  // QN4_RANDOM_HPP_

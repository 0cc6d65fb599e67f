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


#include "doctest.h"
#include "fixtures.hpp"
#include "qn4/random.hpp"

using namespace qn4;
using namespace qn4::testing;

TEST_CASE("random formulas respect the shape") {
  Rng rng(1);
  for (int k = 0; k < 500; ++k) {
    const Formula f = random_formula(rng, {4, {"x", "y"}, false});
    CHECK(f.depth() <= 4);
    CHECK(f.is_core());
    for (const auto& v : variables(f)) CHECK((v == "x" || v == "y"));
  }
  CHECK_THROWS_AS(random_formula(rng, {3, {}, false}), std::invalid_argument);
}

TEST_CASE("generators are a function of the seed") {
  Rng a(42), b(42);
  for (int k = 0; k < 50; ++k) CHECK(random_formula(a) == random_formula(b));
  Rng c(9), d(9);
  for (int k = 0; k < 20; ++k) {
    const RandomProof p = random_proof(c), q = random_proof(d);
    CHECK(p.discharged == q.discharged);
    CHECK(p.proof.conclusion() == q.proof.conclusion());
  }
}

TEST_CASE("random proofs check and keep their premise") {
  Rng rng(8);
  for (int k = 0; k < 200; ++k) {
    const RandomProof p = random_proof(rng);
    CHECK(check_proof(p.proof).accepted);
    CHECK(std::find(p.proof.premises.begin(), p.proof.premises.end(), p.discharged) != p.proof.premises.end());
  }
}

TEST_CASE("mutants change between one and max_changes cells") {
  Rng rng(4);
  const FiniteAlgebra a = full_twist(three_chain());
  for (int k = 0; k < 200; ++k) {
    const FiniteAlgebra m = mutate(a, rng, 3);
    std::size_t changed = 0;
    for (std::size_t i = 0; i < a.meet.cells().size(); ++i) {
      changed += a.meet.cells()[i] != m.meet.cells()[i];
      changed += a.join.cells()[i] != m.join.cells()[i];
      changed += a.imp.cells()[i] != m.imp.cells()[i];
    }
    for (std::size_t i = 0; i < a.size; ++i) changed += a.neg[i] != m.neg[i];
    CHECK(changed >= 1);
    CHECK(changed <= 3);
    m.validate();
  }
}

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


// Acceptance criteria 1-9. One PASS/FAIL line per criterion; exit status 1
// when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "qn4/canonical.hpp"
#include "qn4/catalog.hpp"
#include "qn4/enumerate.hpp"
#include "qn4/random.hpp"

using namespace qn4;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;
};

int failures = 0;

void criterion(int number, const char* name, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s %d %s: %s (%.2fs)\n", o.passed ? "PASS" : "FAIL", number, name, o.detail.c_str(), s);
  std::fflush(stdout);
  if (!o.passed) ++failures;
}

std::string count(std::size_t n, const char* what) { return std::to_string(n) + " " + what; }

}  // namespace

int main() {
  const ModelZoo zoo = build_zoo(4, 16);

  criterion(1, "derivation tables reproduce", [] {
    const std::vector<std::string> required = {
        "alg_i",        "alg_ii",         "alg_iii",         "alg_iv",       "cong_and_5",   "cong_or_neg_11",
        "cong_imp_neg_15", "idem_and_a",  "idem_and_b",      "idem_and_c",   "idem_and_d",   "comm_and_a",
        "comm_and_b",   "comm_and_c",     "comm_and_d",      "absorp_and_a", "absorp_and_b", "absorp_and_c",
        "absorp_and_d", "assoc_and_a",    "assoc_and_b"};
    Outcome o;
    std::size_t checked = 0;
    for (const auto& name : required) {
      const CatalogEntry* e = find_derivation(name);
      if (!e) return Outcome{false, "missing " + name};
    }
    for (const auto& e : builtin_derivations()) {
      if (e.origin == Origin::Constructed) continue;
      ++checked;
      const ProofReport r = check_proof(e.proof);
      if (!r.accepted) return Outcome{false, e.name + ": " + r.message};
    }
    o.detail = count(checked, "printed or described derivations accepted") + ", including " +
               count(required.size(), "listed tables");
    return o;
  });

  criterion(2, "E(Ax1)..E(Ax22) hold on the zoo", [&] {
    std::uint64_t assignments = 0;
    for (const auto& m : zoo.models)
      for (int n = 1; n <= kAxiomCount; ++n) {
        const CheckReport r = check_equation(m.algebra(), e_translate(scheme_of(axiom(n))));
        assignments += r.assignments;
        if (!r.passed) return Outcome{false, "Ax" + std::to_string(n) + " fails on model " + m.key};
      }
    return Outcome{true, count(zoo.models.size(), "models") + " x 22 axioms, " +
                             std::to_string(assignments) + " assignments"};
  });

  criterion(3, "E(a), E(a -> b) imply E(b) on the zoo", [&] {
    const QuasiEquation mp{{e_translate(parse("x")), e_translate(parse("x -> y"))}, e_translate(parse("y"))};
    std::uint64_t assignments = 0;
    for (const auto& m : zoo.models) {
      const CheckReport r = check_quasiequation(m.algebra(), mp);
      assignments += r.assignments;
      if (!r.passed) return Outcome{false, "fails on model " + m.key};
    }
    return Outcome{true, count(zoo.models.size(), "models") + ", " + std::to_string(assignments) + " assignments"};
  });

  criterion(4, "relational and equational QN4 checks agree", [&] {
    std::vector<const FiniteAlgebra*> small;
    for (const auto& m : zoo.models)
      if (m.algebra().size <= 4) small.push_back(&m.algebra());
    std::size_t disagreements = 0, qn4 = 0;
    for (const auto* a : small) disagreements += is_qn4_relational(*a).passed() != is_qn4_equational(*a).passed();
    Rng rng(1);
    const std::size_t mutants = 10000;
    for (std::size_t k = 0; k < mutants; ++k) {
      const FiniteAlgebra& src = *small[std::uniform_int_distribution<std::size_t>(0, small.size() - 1)(rng)];
      const FiniteAlgebra m = mutate(src, rng);
      const bool rel = is_qn4_relational(m).passed();
      qn4 += rel;
      disagreements += rel != is_qn4_equational(m).passed();
    }
    return Outcome{disagreements == 0, count(small.size(), "zoo algebras") + " + " + count(mutants, "mutants") +
                                           " (" + std::to_string(qn4) + " still QN4), " +
                                           count(disagreements, "disagreements")};
  });

  criterion(5, "every QN4-lattice up to size 6 is a twist structure", [&] {
    std::size_t checked = 0;
    for (const auto& m : zoo.models) {
      const FiniteAlgebra& a = m.algebra();
      if (a.size > 6) continue;
      if (!is_qn4_relational(a).passed()) return Outcome{false, "zoo model is not QN4: " + m.key};
      const Representation r = represent(a);
      if (canonical_key(r.twist.algebra) != canonical_key(a)) return Outcome{false, "image not isomorphic"};
      for (Element x = 0; x < a.size; ++x) {
        if (r.iota[a.neg[x]] != r.twist.algebra.neg[r.iota[x]]) return Outcome{false, "iota misses ~"};
        for (Element y = 0; y < a.size; ++y)
          if (r.iota[a.meet(x, y)] != r.twist.algebra.meet(r.iota[x], r.iota[y]) ||
              r.iota[a.join(x, y)] != r.twist.algebra.join(r.iota[x], r.iota[y]) ||
              r.iota[a.imp(x, y)] != r.twist.algebra.imp(r.iota[x], r.iota[y]))
            return Outcome{false, "iota is not a homomorphism"};
      }
      ++checked;
    }
    return Outcome{checked > 0, count(checked, "representations verified")};
  });

  criterion(6, "non-involutive and non-explosive QN4-lattices exist", [&] {
    const Equation involutive{parse("~~x"), var("x")};
    const Equation explosive = preceq_equation(parse("x /\\ ~x"), var("y"));
    std::size_t non_n4 = 0, non_qn = 0;
    for (const auto& m : zoo.models) {
      if (!is_qn4_relational(m.algebra()).passed()) continue;
      const CheckReport a = check_equation(m.algebra(), involutive);
      const CheckReport b = check_equation(m.algebra(), explosive);
      non_n4 += !a.passed && a.witness && refutes(m.algebra(), involutive, *a.witness);
      non_qn += !b.passed && b.witness && refutes(m.algebra(), explosive, *b.witness);
    }
    return Outcome{non_n4 > 0 && non_qn > 0, count(non_n4, "refute ~~x = x") + ", " +
                                                 count(non_qn, "refute x /\\ ~x <= y")};
  });

  criterion(7, "deduction on random proofs", [] {
    Rng rng(1);
    const std::size_t proofs = 1000;
    std::size_t steps = 0;
    for (std::size_t k = 0; k < proofs; ++k) {
      const RandomProof rp = random_proof(rng, 6);
      if (!check_proof(rp.proof).accepted) return Outcome{false, "generator produced a rejected proof"};
      const Proof d = deduction(rp.proof, rp.discharged);
      const ProofReport r = check_proof(d);
      if (!r.accepted) return Outcome{false, "proof " + std::to_string(k) + ": " + r.message};
      if (d.conclusion() != imp(rp.discharged, rp.proof.conclusion()))
        return Outcome{false, "proof " + std::to_string(k) + " concludes " + render(d.conclusion())};
      steps += r.kernel_steps;
    }
    return Outcome{true, count(proofs, "proofs") + ", " + count(steps, "kernel steps after discharge")};
  });

  criterion(8, "parse(render(f)) = f", [] {
    Rng rng(1);
    const std::size_t formulas = 10000;
    std::size_t deepest = 0;
    for (std::size_t k = 0; k < formulas; ++k) {
      const Formula f = random_formula(rng, {8, {"p", "q", "r", "s"}, false});
      deepest = std::max(deepest, f.depth());
      if (parse(render(f)) != f) return Outcome{false, "round-trip fails on " + render(f)};
      const Formula g = random_formula(rng, {8, {"p", "q", "r", "s"}, true});
      if (parse_extended(render(g)) != g) return Outcome{false, "round-trip fails on " + render(g)};
    }
    return Outcome{true, count(formulas, "core") + " + " + count(formulas, "extended formulas") +
                             ", depth up to " + std::to_string(deepest)};
  });

  criterion(9, "twist operations preserve the fiber", [&] {
    std::uint64_t pairs = 0;
    for (const auto& b : zoo.bases) {
      const CheckReport r = fiber_closure(b.algebra);
      pairs += r.assignments;
      if (!r.passed) return Outcome{false, "fails at " + r.detail};
    }
    return Outcome{true, count(zoo.bases.size(), "bases") + ", " + std::to_string(pairs) + " pairs"};
  });

  return failures == 0 ? 0 : 1;
}

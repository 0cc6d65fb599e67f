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
#include "qn4/hilbert.hpp"
#include "qn4/proof_builder.hpp"
#include "qn4/proof_io.hpp"
#include "qn4/random.hpp"

using namespace qn4;
using nlohmann::json;

namespace {

ProofStep step(const char* f, Justification j) { return {parse(f), std::move(j)}; }

Proof modus_ponens_proof() {
  Proof p;
  p.premises = {parse("p"), parse("p -> q")};
  p.steps = {step("p", PremiseRule{}), step("p -> q", PremiseRule{}), step("q", MpRule{0, 1})};
  return p;
}

}  // namespace

TEST_CASE("axiom names") {
  CHECK(axiom_name(axiom(7)) == "Ax7");
  CHECK(axiom_from_name("Ax10(->)") == directional(10, true));
  CHECK(axiom_from_name("Ax10 (<-)") == directional(10, false));
  CHECK(axiom_from_name("Ax12_bwd") == directional(12, false));
  CHECK(axiom_from_name("Ax9 (→)") == directional(9, true));
  CHECK_FALSE(axiom_from_name("Ax23"));
  CHECK_FALSE(axiom_from_name("Ax3(->)"));
  CHECK(is_directional(directional(14, false)));
  CHECK(axiom_number(directional(14, false)) == 14);
  CHECK(scheme_of(directional(9, true)) == parse("~(a \\/ b) -> ~a /\\ ~b"));
  CHECK(scheme_of(directional(9, false)) == parse("~a /\\ ~b -> ~(a \\/ b)"));
}

TEST_CASE("modus ponens, cited in either order") {
  Proof p = modus_ponens_proof();
  CHECK(check_proof(p).accepted);
  p.steps[2].rule = MpRule{1, 0};
  CHECK(check_proof(p).accepted);
}

TEST_CASE("rejections name the failing step") {
  Proof p = modus_ponens_proof();
  p.steps[2].formula = parse("r");
  ProofReport r = check_proof(p);
  CHECK_FALSE(r.accepted);
  REQUIRE(r.failing_step);
  CHECK(*r.failing_step == 2);

  p = modus_ponens_proof();
  p.steps[2].rule = MpRule{2, 0};  // forward reference
  CHECK_FALSE(check_proof(p).accepted);

  p = modus_ponens_proof();
  p.steps.push_back(step("q -> p -> q", AxiomRule{axiom(2), {}}));
  r = check_proof(p);
  CHECK_FALSE(r.accepted);
  CHECK(*r.failing_step == 3);

  p = modus_ponens_proof();
  p.steps[1] = step("r", PremiseRule{});
  CHECK_FALSE(check_proof(p).accepted);

  CHECK_FALSE(check_proof(Proof{}).accepted);
}

TEST_CASE("axiom instances by matching or by explicit substitution") {
  Proof p;
  p.steps = {step("q -> p -> q", AxiomRule{axiom(1), {}})};
  CHECK(check_proof(p).accepted);
  p.steps[0].rule = AxiomRule{axiom(1), Substitution{{"a", parse("q")}, {"b", parse("p")}}};
  CHECK(check_proof(p).accepted);
  p.steps[0].rule = AxiomRule{axiom(1), Substitution{{"a", parse("p")}, {"b", parse("q")}}};
  CHECK_FALSE(check_proof(p).accepted);
}

TEST_CASE("macros expand to primitive steps") {
  ProofBuilder B({parse("~(p \\/ q)")});
  const auto prem = B.premise(parse("~(p \\/ q)"));
  const auto ax = B.axiom(directional(9, true), Substitution{{"a", parse("p")}, {"b", parse("q")}});
  B.mp(prem, ax);
  B.identity(parse("p"));
  const Proof p = B.build();
  CHECK_FALSE(is_primitive(p));
  const Proof e = expand_macros(p);
  CHECK(is_primitive(e));
  CHECK(e.steps.back().formula == parse("p -> p"));
  const ProofReport r = check_proof(p);
  CHECK(r.accepted);
  CHECK(r.kernel_steps == e.steps.size());
  CHECK(r.kernel_steps > p.steps.size());
}

TEST_CASE("chain lemma cites its premises in either order") {
  Proof p;
  p.premises = {parse("p -> q"), parse("q -> r")};
  p.steps = {step("p -> q", PremiseRule{}), step("q -> r", PremiseRule{}),
             step("p -> r", LemmaRule{LemmaId::Chain, {1, 0}})};
  CHECK(check_proof(p).accepted);
  p.steps[2].rule = LemmaRule{LemmaId::Chain, {0, 1}};
  CHECK(check_proof(p).accepted);
}

TEST_CASE("deduction discharges a premise") {
  const Proof d = deduction(modus_ponens_proof(), parse("p"));
  CHECK(d.premises == std::vector<Formula>{parse("p -> q")});
  CHECK(d.conclusion() == parse("p -> q"));
  CHECK(check_proof(d).accepted);
  // A formula that is not a premise is discharged vacuously.
  const Proof w = deduction(modus_ponens_proof(), parse("r"));
  CHECK(w.premises.size() == 2);
  CHECK(w.conclusion() == parse("r -> q"));
  CHECK(check_proof(w).accepted);
  Proof bad = modus_ponens_proof();
  bad.steps[2].formula = parse("r");
  CHECK_THROWS_AS(deduction(bad, parse("p")), ProofError);
}

TEST_CASE("deduction on random proofs") {
  Rng rng(11);
  for (int k = 0; k < 200; ++k) {
    const RandomProof rp = random_proof(rng);
    REQUIRE(check_proof(rp.proof).accepted);
    const Proof d = deduction(rp.proof, rp.discharged);
    CHECK(d.conclusion() == imp(rp.discharged, rp.proof.conclusion()));
    CHECK(check_proof(d).accepted);
  }
}

TEST_CASE("instantiate maps proofs to proofs") {
  const Proof p = instantiate(modus_ponens_proof(), {{"p", parse("r /\\ s")}, {"q", parse("~r")}});
  CHECK(p.conclusion() == parse("~r"));
  CHECK(check_proof(p).accepted);
}

TEST_CASE("delta and the E translation") {
  const auto d = delta(var("x"), var("y"));
  CHECK(d[0] == parse("x -> y"));
  CHECK(d[1] == parse("y -> x"));
  CHECK(d[2] == parse("~x -> ~y"));
  CHECK(d[3] == parse("~y -> ~x"));
  const Equation e = e_translate(parse("p"));
  CHECK(e.lhs == parse("p"));
  CHECK(e.rhs == parse("|p|"));
}

TEST_CASE("table rows") {
  CHECK(std::holds_alternative<PremiseRule>(parse_rule("Premise")));
  const auto mp = std::get<MpRule>(parse_rule("MP, 4, 7"));
  CHECK(mp.first == 3);
  CHECK(mp.second == 6);
  CHECK(std::get<AxiomRule>(parse_rule("Ax10 (->)")).id == directional(10, true));
  const auto l = std::get<LemmaRule>(parse_rule("Lemma 1.2, 2, 3"));
  CHECK(l.id == LemmaId::Chain);
  CHECK(l.refs == std::vector<std::size_t>{1, 2});
  CHECK_THROWS_AS(parse_rule("Ax99"), ProofFormatError);
  CHECK_THROWS_AS(parse_rule("MP, 0, 1"), ProofFormatError);

  const Proof p = proof_from_rows({"p", "p -> q"}, {{"p", "Premise"}, {"p -> q", "Premise"}, {"q", "MP 1, 2"}});
  CHECK(check_proof(p).accepted);
}

TEST_CASE("proof files round-trip") {
  Rng rng(3);
  for (int k = 0; k < 50; ++k) {
    const Proof p = random_proof(rng).proof;
    const json j = to_json(p);
    const Proof q = proof_from_json(json::parse(j.dump()));
    CHECK(to_json(q) == j);
    CHECK(check_proof(q).accepted);
  }
  const json bad = json::parse(R"({"premises": [], "steps": [{"formula": "p", "rule": "guess"}]})");
  CHECK_THROWS_AS(proof_from_json(bad), ProofFormatError);
  const json report = to_json(check_proof(modus_ponens_proof()));
  CHECK(report.at("accepted") == true);
}

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


#include <functional>

#include "doctest.h"
#include "fixtures.hpp"
#include "qn4/algebra.hpp"
#include "qn4/algebra_io.hpp"
#include "qn4/random.hpp"

using namespace qn4;
using namespace qn4::testing;

namespace {

// Pair arithmetic written out from the twist definitions, over the base's
// own lattice order; used as an oracle for eval on full twists.
Pair pair_eval(const NuclearBrouwerian& b, const Formula& f, const std::map<std::string, Pair>& v) {
  auto box = [&](Element x) { return b.box[x]; };
  switch (f.kind()) {
    case Kind::Var:
      return v.at(f.name());
    case Kind::Neg: {
      const Pair x = pair_eval(b, f.operand(), v);
      return {x.second, box(x.first)};
    }
    case Kind::And: {
      const Pair x = pair_eval(b, f.lhs(), v), y = pair_eval(b, f.rhs(), v);
      return {b.meet(x.first, y.first), box(b.join(x.second, y.second))};
    }
    case Kind::Or: {
      const Pair x = pair_eval(b, f.lhs(), v), y = pair_eval(b, f.rhs(), v);
      return {b.join(x.first, y.first), b.meet(x.second, y.second)};
    }
    case Kind::Imp: {
      const Pair x = pair_eval(b, f.lhs(), v), y = pair_eval(b, f.rhs(), v);
      return {b.imp(x.first, y.first), b.meet(box(x.first), y.second)};
    }
    default:
      throw std::logic_error("core formulas only");
  }
}

}  // namespace

TEST_CASE("tables") {
  const Table t = Table::from_rows({{0, 1}, {1, 1}});
  CHECK(t(0, 1) == 1);
  CHECK(t.rows() == std::vector<std::vector<int>>{{0, 1}, {1, 1}});
  CHECK_THROWS(Table::from_rows({{0, 1}, {1}}));
  FiniteAlgebra a = full_twist(two_chain());
  a.validate();
  a.neg[0] = 9;
  CHECK_THROWS(a.validate());
}

TEST_CASE("eval agrees with pair arithmetic on full twists") {
  Rng rng(5);
  for (const auto& b : {two_chain(), two_chain(true), three_chain()}) {
    const FiniteAlgebra a = full_twist(b);
    for (int k = 0; k < 300; ++k) {
      const Formula f = random_formula(rng, {5, {"p", "q"}, false});
      const Element p = static_cast<Element>(rng() % a.size), q = static_cast<Element>(rng() % a.size);
      const Pair pp{static_cast<Element>(p / b.size), static_cast<Element>(p % b.size)};
      const Pair qp{static_cast<Element>(q / b.size), static_cast<Element>(q % b.size)};
      const Pair expect = pair_eval(b, f, {{"p", pp}, {"q", qp}});
      CHECK(eval(a, f, {{"p", p}, {"q", q}}) == pair_index(b, expect.first, expect.second));
    }
  }
}

TEST_CASE("eval rejects unbound variables") {
  const FiniteAlgebra a = full_twist(two_chain());
  CHECK_THROWS_AS(eval(a, parse("p -> q"), {{"p", 0}}), UnboundVariable);
}

TEST_CASE("equations report a first counterexample that refutes") {
  const TwistStructure t = make_twist(two_chain(true), fiber(two_chain(true)));
  const Equation dn{parse("~~x"), var("x")};
  const CheckReport r = check_equation(t.algebra, dn);
  CHECK_FALSE(r.passed);
  REQUIRE(r.witness);
  CHECK(refutes(t.algebra, dn, *r.witness));
  CHECK(r.law == "~~x = x");

  const CheckReport ok = check_equation(full_twist(two_chain()), dn);
  CHECK(ok.passed);
  CHECK(ok.assignments == 4);
}

TEST_CASE("quasi-equations") {
  const FiniteAlgebra a = full_twist(two_chain());
  const QuasiEquation mp{{e_translate(parse("x")), e_translate(parse("x -> y"))}, e_translate(parse("y"))};
  CHECK(check_quasiequation(a, mp).passed);
  const QuasiEquation wrong{{e_translate(parse("x -> y"))}, e_translate(parse("y"))};
  const CheckReport r = check_quasiequation(a, wrong);
  CHECK_FALSE(r.passed);
  REQUIRE(r.witness);
  CHECK(refutes(a, wrong, *r.witness));
}

TEST_CASE("strong implication must be read with a conjunction") {
  // With => as (x -> y) -> (~y -> ~x), strong equivalence substitution fails on a QN4-lattice:
  // the full twist over the 2-chain, x = <1,0>, y = <0,0>.
  const NuclearBrouwerian b = two_chain();
  const FiniteAlgebra a = full_twist(b);
  REQUIRE(is_qn4_relational(a).passed());

  const Formula x = var("x"), y = var("y");
  auto arrow_reading = [](const Formula& p, const Formula& q) { return imp(imp(p, q), imp(neg(q), neg(p))); };
  const Formula sif = conj(arrow_reading(x, y), arrow_reading(y, x));
  const Equation bad{imp(sif, x), imp(sif, y)};
  const Assignment v{{"x", pair_index(b, 1, 0)}, {"y", pair_index(b, 0, 0)}};
  CHECK(eval(a, bad.lhs, v) != eval(a, bad.rhs, v));
  CHECK_FALSE(check_equation(a, bad).passed);

  const Equation good{parse("(x <=> y) -> x"), parse("(x <=> y) -> y")};
  CHECK(eval(a, good.lhs, v) == eval(a, good.rhs, v));
  CHECK(check_equation(a, good).passed);
}

TEST_CASE("full twist over a constant-top nucleus is not a QN4-lattice") {
  const NuclearBrouwerian b = two_chain(true);
  const FiniteAlgebra a = full_twist(b);
  const CompositeReport rel = is_qn4_relational(a);
  CHECK_FALSE(rel.passed());
  CHECK_FALSE(is_qn4_equational(a).passed());
  const auto v = rel.violated();
  CHECK(std::find(v.begin(), v.end(), "QN4e.2") != v.end());

  // Its fiber is one.
  const TwistStructure t = make_twist(b, fiber(b));
  CHECK(t.carrier == std::vector<Pair>{{0, 1}, {1, 1}});
  CHECK(is_qn4_relational(t.algebra).passed());
  CHECK(is_qn4_equational(t.algebra).passed());
  CHECK_FALSE(is_n4(t.algebra).passed);
}

TEST_CASE("lattice, Brouwerian and nucleus validators") {
  const NuclearBrouwerian b = three_chain();
  CHECK(is_lattice(b.meet, b.join).passed());
  CHECK(is_distributive(b.meet, b.join).passed);
  CHECK(is_brouwerian(b.meet, b.join, b.imp).passed());
  CHECK(is_nucleus(b.meet, b.join, b.box).passed());
  CHECK(is_nucleus(b.meet, b.join, {2, 2, 2}).passed());
  CHECK(is_nucleus(b.meet, b.join, {1, 1, 2}).passed());
  CHECK_FALSE(is_nucleus(b.meet, b.join, {0, 0, 2}).passed());  // not inflationary
  CHECK_FALSE(is_nucleus(b.meet, b.join, {2, 1, 2}).passed());  // not monotone
  const auto imp = residuum_of(b.meet, b.join);
  REQUIRE(imp);
  CHECK(*imp == b.imp);

  Table bad = b.meet;
  bad.at(0, 1) = 1;
  CHECK_FALSE(is_lattice(bad, b.join).passed());

  // The diamond M3 is a lattice but not distributive.
  const Table m3m = Table::from_rows({{0, 0, 0, 0, 0}, {0, 1, 0, 0, 1}, {0, 0, 2, 0, 2}, {0, 0, 0, 3, 3}, {0, 1, 2, 3, 4}});
  const Table m3j = Table::from_rows({{0, 1, 2, 3, 4}, {1, 1, 4, 4, 4}, {2, 4, 2, 4, 4}, {3, 4, 4, 3, 4}, {4, 4, 4, 4, 4}});
  CHECK(is_lattice(m3m, m3j).passed());
  CHECK_FALSE(is_distributive(m3m, m3j).passed);
  CHECK_FALSE(residuum_of(m3m, m3j));
}

TEST_CASE("preorder and quotient") {
  const NuclearBrouwerian b = two_chain();
  const FiniteAlgebra a = full_twist(b);
  // a <= b iff the first components are ordered.
  for (Element x = 0; x < a.size; ++x)
    for (Element y = 0; y < a.size; ++y)
      CHECK(preceq(a, x, y) == b.leq(static_cast<Element>(x / 2), static_cast<Element>(y / 2)));
  const Partition p = equiv_classes(a);
  CHECK(p.classes.size() == 2);
  const Quotient q = quotient(a);
  CHECK(q.algebra.size == 2);
  CHECK(q.algebra.box == std::vector<Element>{0, 1});
  CHECK(equivalent(a, pair_index(b, 1, 0), pair_index(b, 1, 1)));
}

TEST_CASE("quotient refuses algebras whose relation is not an equivalence") {
  FiniteAlgebra a = full_twist(two_chain());
  a.imp.at(0, 0) = 0;
  CHECK_THROWS_AS(quotient(a), QuotientError);
}

TEST_CASE("algebra files round-trip") {
  const FiniteAlgebra a = full_twist(three_chain());
  CHECK(algebra_from_json(nlohmann::json::parse(to_json(a).dump())) == a);
  const NuclearBrouwerian b = three_chain();
  CHECK(base_from_json(to_json(b)) == b);
  CHECK(std::holds_alternative<NuclearBrouwerian>(any_from_json(to_json(b))));
  CHECK(std::holds_alternative<FiniteAlgebra>(any_from_json(to_json(a))));
  nlohmann::json broken = to_json(a);
  broken["meet"][0][0] = 99;
  CHECK_THROWS(algebra_from_json(broken));
}

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


#include <random>

#include "doctest.h"
#include "qn4/formula.hpp"
#include "qn4/random.hpp"

using namespace qn4;

TEST_CASE("precedence: ~ binds tightest, then /\\, \\/, ->, <->") {
  CHECK(parse("~p /\\ q \\/ r -> s") == imp(disj(conj(neg(var("p")), var("q")), var("r")), var("s")));
  CHECK(parse("p \\/ q /\\ r") == disj(var("p"), conj(var("q"), var("r"))));
  CHECK(parse_extended("p -> q <-> r") == iff(imp(var("p"), var("q")), var("r")));
  CHECK(parse_extended("p <=> q -> r") == strong_iff(var("p"), imp(var("q"), var("r"))));
}

TEST_CASE("associativity") {
  CHECK(parse("p -> q -> r") == imp(var("p"), imp(var("q"), var("r"))));
  CHECK(parse("p /\\ q /\\ r") == conj(conj(var("p"), var("q")), var("r")));
  CHECK(parse("p \\/ q \\/ r") == disj(disj(var("p"), var("q")), var("r")));
  CHECK(parse_extended("p <-> q <-> r") == iff(var("p"), iff(var("q"), var("r"))));
}

TEST_CASE("derived connectives expand") {
  const Formula p = var("p"), q = var("q");
  CHECK(parse("p <-> q") == conj(imp(p, q), imp(q, p)));
  CHECK(parse("p => q") == conj(imp(p, q), imp(neg(q), neg(p))));
  CHECK(parse("|p|") == imp(p, p));
  const Formula s = conj(imp(p, q), imp(neg(q), neg(p)));
  const Formula t = conj(imp(q, p), imp(neg(p), neg(q)));
  CHECK(parse("p <=> q") == conj(s, t));
  CHECK(parse("p <=> q").is_core());
  CHECK_FALSE(parse_extended("p <=> q").is_core());
  CHECK(expand_derived(parse_extended("|p => q|")) == parse("|p => q|"));
}

TEST_CASE("unicode glyphs") {
  CHECK(parse("∼p ∧ q → r ∨ s") == parse("~p /\\ q -> r \\/ s"));
  CHECK(parse("p ⇒ q") == parse("p => q"));
  CHECK(parse("p ⇔ q") == parse("p <=> q"));
  CHECK(parse("p ↔ q") == parse("p <-> q"));
  CHECK(parse_equation("p ≈ ~~p").rhs == parse("~~p"));
}

TEST_CASE("identifiers may carry digits") {
  const Formula f = parse("a1 -> b2 /\\ a1");
  CHECK(variables(f) == std::vector<std::string>{"a1", "b2"});
}

TEST_CASE("parse errors carry the offset") {
  auto offset = [](const char* text) -> long {
    try {
      parse(text);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  CHECK(offset("p ->") == 4);
  CHECK(offset("(p /\\ q") == 7);
  CHECK(offset("p $ q") == 2);
  CHECK(offset("p q") == 2);
  CHECK(offset("|p") == 2);
  CHECK_THROWS_AS(parse_equation("p -> q"), ParseError);
}

TEST_CASE("render keeps only the needed parentheses") {
  CHECK(render(parse("(p -> q) -> r")) == "(p -> q) -> r");
  CHECK(render(parse("p -> (q -> r)")) == "p -> q -> r");
  CHECK(render(parse("~(p /\\ q)")) == "~(p /\\ q)");
  CHECK(render(parse("~~p")) == "~~p");
  CHECK(render(parse("(p /\\ q) /\\ r")) == "p /\\ q /\\ r");
  CHECK(render(parse("p /\\ (q /\\ r)")) == "p /\\ (q /\\ r)");
  CHECK(render(parse_extended("|p => q|")) == "|p => q|");
}

TEST_CASE("render and parse round-trip on random formulas") {
  Rng rng(7);
  for (int k = 0; k < 2000; ++k) {
    const Formula f = random_formula(rng, {6, {"p", "q", "r"}, true});
    CHECK(parse_extended(render(f)) == f);
    CHECK(parse(render(f)) == expand_derived(f));
  }
}

TEST_CASE("substitution and scheme matching") {
  const Formula scheme = parse("a -> b -> a");
  const Substitution s{{"a", parse("p /\\ q")}, {"b", parse("~r")}};
  const Formula inst = substitute(scheme, s);
  CHECK(inst == parse("p /\\ q -> ~r -> p /\\ q"));
  const auto m = match_scheme(scheme, inst);
  REQUIRE(m);
  CHECK(*m == s);
  CHECK_FALSE(match_scheme(scheme, parse("p -> q -> r")));
  CHECK(occurs("r", inst));
  CHECK_FALSE(occurs("s", inst));
}

TEST_CASE("depth and size") {
  const Formula f = parse("~(p -> q) /\\ r");
  CHECK(f.depth() == 3);
  CHECK(f.size() == 6);
  CHECK(var("p").depth() == 0);
}

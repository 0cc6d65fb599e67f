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


#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "qn4/canonical.hpp"
#include "qn4/twist.hpp"

using namespace qn4;
using namespace qn4::testing;

namespace {

// All closed, pi1-surjective subsets of the fiber, by trying every subset.
std::set<std::vector<Pair>> naive_subalgebras(const NuclearBrouwerian& b) {
  const std::vector<Pair> f = fiber(b);
  std::set<std::vector<Pair>> out;
  for (std::uint32_t mask = 1; mask < (1u << f.size()); ++mask) {
    std::set<Pair> s;
    for (std::size_t i = 0; i < f.size(); ++i)
      if (mask >> i & 1) s.insert(f[i]);
    bool ok = true;
    std::set<Element> firsts;
    for (const Pair& x : s) {
      firsts.insert(x.first);
      ok = ok && s.count(twist_neg(b, x));
      for (const Pair& y : s)
        ok = ok && s.count(twist_meet(b, x, y)) && s.count(twist_join(b, x, y)) && s.count(twist_imp(b, x, y));
    }
    if (ok && firsts.size() == b.size) out.insert(std::vector<Pair>(s.begin(), s.end()));
  }
  return out;
}

}  // namespace

TEST_CASE("twist operations on pairs") {
  const NuclearBrouwerian id = two_chain(), top = two_chain(true);
  CHECK(twist_neg(id, {1, 0}) == Pair{0, 1});
  CHECK(twist_neg(top, {0, 1}) == Pair{1, 1});
  CHECK(twist_meet(top, {1, 1}, {0, 0}) == Pair{0, 1});
  CHECK(twist_meet(id, {1, 1}, {0, 0}) == Pair{0, 1});
  CHECK(twist_join(id, {1, 1}, {0, 0}) == Pair{1, 0});
  CHECK(twist_imp(top, {0, 1}, {1, 1}) == Pair{1, 1});
  CHECK(twist_imp(id, {0, 1}, {1, 1}) == Pair{1, 0});
}

TEST_CASE("the full product is a lattice exactly when box is the identity") {
  // Off the fiber, <a1,a2> /\ <a1,a2> = <a1, box a2> moves; on it, never.
  for (const auto& base : default_zoo().bases) {
    const NuclearBrouwerian& b = base.algebra;
    bool identity = true;
    for (Element x = 0; x < b.size; ++x) identity = identity && b.box[x] == x;
    const FiniteAlgebra a = full_twist(b);
    CHECK(a.size == b.size * b.size);
    CHECK(is_lattice(a.meet, a.join).passed() == identity);
    if (identity) CHECK(is_distributive(a.meet, a.join).passed);
    const TwistStructure f = make_twist(b, fiber(b));
    CHECK(is_lattice(f.algebra.meet, f.algebra.join).passed());
    CHECK(is_distributive(f.algebra.meet, f.algebra.join).passed);
  }
  const NuclearBrouwerian top = two_chain(true);
  CHECK(twist_meet(top, {0, 0}, {0, 1}) == Pair{0, 1});
  CHECK(twist_meet(top, {0, 0}, {0, 0}) == Pair{0, 1});
}

TEST_CASE("twist subalgebras match a subset-by-subset search") {
  const ModelZoo& zoo = default_zoo();
  for (const auto& base : zoo.bases) {
    const NuclearBrouwerian& b = base.algebra;
    if (fiber(b).size() > 12) continue;
    std::set<std::vector<Pair>> fast;
    for (const auto& t : twist_subalgebras(b)) {
      fast.insert(t.carrier);
      CHECK(is_qn4_relational(t.algebra).passed());
    }
    CHECK(fast == naive_subalgebras(b));
  }
}

TEST_CASE("twist subalgebras over the 2-chain") {
  const auto id = twist_subalgebras(two_chain());
  std::set<std::vector<Pair>> carriers;
  for (const auto& t : id) carriers.insert(t.carrier);
  CHECK(carriers == std::set<std::vector<Pair>>{{{0, 1}, {1, 0}},
                                                {{0, 0}, {0, 1}, {1, 0}},
                                                {{0, 1}, {1, 0}, {1, 1}},
                                                {{0, 0}, {0, 1}, {1, 0}, {1, 1}}});
  const auto top = twist_subalgebras(two_chain(true));
  REQUIRE(top.size() == 1);
  CHECK(top[0].carrier == std::vector<Pair>{{0, 1}, {1, 1}});
  CHECK_THROWS_AS(twist_subalgebras(three_chain(), true, 4), TwistError);
}

TEST_CASE("generated subalgebras") {
  const NuclearBrouwerian b = two_chain();
  const TwistStructure t = generated_subalgebra(b, {{1, 0}});
  CHECK(t.carrier == std::vector<Pair>{{0, 1}, {1, 0}});
  CHECK(t.index_of({1, 0}) == 1);
  CHECK_FALSE(t.index_of({1, 1}));
  CHECK_THROWS_AS(generated_subalgebra(two_chain(true), {{1, 0}}), TwistError);
  CHECK_THROWS_AS(generated_subalgebra(b, {{3, 0}}), TwistError);
}

TEST_CASE("fiber closure on every base") {
  for (const auto& base : default_zoo().bases) CHECK(fiber_closure(base.algebra).passed);
}

TEST_CASE("double negation is the identity iff box fixes every first component") {
  for (const auto& m : default_zoo().models) {
    bool fixes = true;
    for (const auto& [a1, a2] : m.twist.carrier) fixes = fixes && m.twist.base.box[a1] == a1;
    CHECK(is_n4(m.algebra()).passed == fixes);
  }
}

TEST_CASE("represent inverts the twist construction") {
  for (const auto& m : default_zoo().models) {
    const Representation r = represent(m.algebra());
    CHECK(canonical_key(r.twist.algebra) == canonical_key(m.algebra()));
    CHECK(canonical_key(r.quotient.algebra) == canonical_key(m.twist.base));
    // iota commutes with every operation
    const FiniteAlgebra& a = m.algebra();
    const FiniteAlgebra& img = r.twist.algebra;
    for (Element x = 0; x < a.size; ++x) {
      CHECK(r.iota[a.neg[x]] == img.neg[r.iota[x]]);
      for (Element y = 0; y < a.size; ++y) {
        CHECK(r.iota[a.meet(x, y)] == img.meet(r.iota[x], r.iota[y]));
        CHECK(r.iota[a.imp(x, y)] == img.imp(r.iota[x], r.iota[y]));
      }
    }
  }
}

TEST_CASE("represent rejects algebras that are not QN4-lattices") {
  const FiniteAlgebra a = full_twist(two_chain(true));
  bool threw = false;
  try {
    represent(a);
  } catch (const TwistError&) {
    threw = true;
  } catch (const QuotientError&) {
    threw = true;
  }
  CHECK(threw);
}

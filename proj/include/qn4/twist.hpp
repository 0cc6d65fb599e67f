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

// Twist structures: algebras of pairs over a nuclear Brouwerian algebra with
//   ~<a1,a2>            = <a2, box a1>
//   <a1,a2> /\ <b1,b2>  = <a1 /\ b1, box(a2 \/ b2)>
//   <a1,a2> \/ <b1,b2>  = <a1 \/ b1, a2 /\ b2>
//   <a1,a2> -> <b1,b2>  = <a1 -> b1, box a1 /\ b2>

#ifndef QN4_TWIST_HPP_
#define QN4_TWIST_HPP_

#include <utility>
#include <vector>

#include "qn4/algebra.hpp"

namespace qn4 {

using Pair = std::pair<Element, Element>;

Pair twist_neg(const NuclearBrouwerian& b, Pair x);
Pair twist_meet(const NuclearBrouwerian& b, Pair x, Pair y);
Pair twist_join(const NuclearBrouwerian& b, Pair x, Pair y);
Pair twist_imp(const NuclearBrouwerian& b, Pair x, Pair y);

struct TwistStructure {
  NuclearBrouwerian base;
  std::vector<Pair> carrier;  // sorted lexicographically
  FiniteAlgebra algebra;      // tables over carrier indices

  std::optional<std::size_t> index_of(Pair p) const;
};

class TwistError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// All of B x B; element <a1,a2> has index a1 * |B| + a2.
FiniteAlgebra full_twist(const NuclearBrouwerian& b);
// Pairs with box a2 = a2, in lexicographic order.
std::vector<Pair> fiber(const NuclearBrouwerian& b);
// Tables induced on a carrier closed under the four operations.
TwistStructure make_twist(const NuclearBrouwerian& b, std::vector<Pair> carrier);

// Least closed superset of `generators`. Throws TwistError when a
// generator lies outside the fiber or the result misses some first
// component.
TwistStructure generated_subalgebra(const NuclearBrouwerian& b, const std::vector<Pair>& generators);

// Every closed, pi1-surjective subset of the fiber (of all of B x B when
// fiber_only is false), ordered by carrier. Throws TwistError when the
// candidate set has more than max_candidates pairs.
std::vector<TwistStructure> twist_subalgebras(const NuclearBrouwerian& b, bool fiber_only = true,
                                              std::size_t max_candidates = 16);

// Checks that every operation maps fiber pairs to fiber pairs.
CheckReport fiber_closure(const NuclearBrouwerian& b);

struct Representation {
  Quotient quotient;                // B(A) and the partition
  TwistStructure twist;             // image of iota
  std::vector<std::size_t> iota;    // element of A -> carrier index
};

// iota(a) = <a/=, ~a/=>; verifies injectivity, surjectivity onto the
// image, the homomorphism property for all four operations and the twist
// conditions on the image. Throws TwistError (or QuotientError) otherwise.
Representation represent(const FiniteAlgebra& a);

}  // namespace qn4

#endif  // QN4_TWIST_HPP_

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

// Isomorphism-invariant keys for finite structures.
//
// The key is the least table serialization over the relabelings reached by
// individualization-refinement. Refinement only ever splits cells in a
// label-independent way, so every isomorphic copy reaches the same set of
// serializations; two structures get the same key iff they are isomorphic.

#ifndef QN4_CANONICAL_HPP_
#define QN4_CANONICAL_HPP_

#include <string>
#include <vector>

#include "qn4/algebra.hpp"

namespace qn4 {

using CanonicalKey = std::string;

// A signature-agnostic view: some binary and some unary operations.
struct Structure {
  std::size_t size = 0;
  std::vector<const Table*> binary;
  std::vector<const std::vector<Element>*> unary;
};

struct Canonical {
  CanonicalKey key;
  std::vector<Element> labeling;  // old element -> new element
};

Canonical canonicalize(const Structure& s);

CanonicalKey canonical_key(const FiniteAlgebra& a);
CanonicalKey canonical_key(const NuclearBrouwerian& b);
CanonicalKey canonical_key(const Table& meet, const Table& join);

// Relabels elements: perm[old] = new.
Table relabel(const Table& t, const std::vector<Element>& perm);
FiniteAlgebra relabel(const FiniteAlgebra& a, const std::vector<Element>& perm);
NuclearBrouwerian relabel(const NuclearBrouwerian& b, const std::vector<Element>& perm);

FiniteAlgebra canonical_form(const FiniteAlgebra& a);
NuclearBrouwerian canonical_form(const NuclearBrouwerian& b);

}  // namespace qn4

#endif  // QN4_CANONICAL_HPP_

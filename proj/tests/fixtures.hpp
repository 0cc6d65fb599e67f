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


// Small hand-built algebras shared by the unit tests.

#ifndef QN4_TESTS_FIXTURES_HPP_
#define QN4_TESTS_FIXTURES_HPP_

#include <vector>

#include "qn4/enumerate.hpp"
#include "qn4/twist.hpp"

namespace qn4::testing {

// 0 < 1 with the identity nucleus, or the constant-top one.
inline NuclearBrouwerian two_chain(bool constant_top = false) {
  const Lattice l{Table::from_rows({{0, 0}, {0, 1}}), Table::from_rows({{0, 1}, {1, 1}})};
  return brouwerian(l, constant_top ? std::vector<Element>{1, 1} : std::vector<Element>{});
}

// 0 < 1 < 2 with the identity nucleus.
inline NuclearBrouwerian three_chain() {
  const Lattice l{Table::from_rows({{0, 0, 0}, {0, 1, 1}, {0, 1, 2}}),
                  Table::from_rows({{0, 1, 2}, {1, 1, 2}, {2, 2, 2}})};
  return brouwerian(l);
}

// Index of the pair <a1, a2> in full_twist(b).
inline Element pair_index(const NuclearBrouwerian& b, Element a1, Element a2) {
  return static_cast<Element>(a1 * b.size + a2);
}

inline const ModelZoo& default_zoo() {
  static const ModelZoo zoo = build_zoo(4, 16);
  return zoo;
}

}  // namespace qn4::testing

#endif  // QN4_TESTS_FIXTURES_HPP_

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

// Named derivations behind algebraizability and the equational
// presentation of QN4-lattices.
//
// Variables a, b, c stand for arbitrary formulas; a1, a2, b1, b2 are the
// components in the congruence items, whose premises are always the eight
// formulas delta(a1, b1) + delta(a2, b2).

#ifndef QN4_CATALOG_HPP_
#define QN4_CATALOG_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "qn4/hilbert.hpp"

namespace qn4 {

enum class Origin {
  Printed,      // a full line-by-line table, transcribed
  Described,    // the construction is named but no table is given
  Constructed,  // left as routine; built here
};

std::string origin_name(Origin o);

struct CatalogEntry {
  std::string name;
  Proof proof;
  Origin origin = Origin::Constructed;
};

// Built once; the order is fixed.
const std::vector<CatalogEntry>& builtin_derivations();
const CatalogEntry* find_derivation(std::string_view name);

// "p, p -> q |- q"
std::string sequent(const Proof& p);

}  // namespace qn4

#endif  // QN4_CATALOG_HPP_

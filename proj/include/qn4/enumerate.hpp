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

// Small distributive lattices, their nuclei, and the zoo of quasi-N4 twist
// structures built over them.

#ifndef QN4_ENUMERATE_HPP_
#define QN4_ENUMERATE_HPP_

#include <filesystem>
#include <string>
#include <vector>

#include "qn4/canonical.hpp"
#include "qn4/twist.hpp"

namespace qn4 {

constexpr std::size_t kMaxLatticeSize = 8;

struct Lattice {
  Table meet, join;
};

class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Distributive lattices with 1..max_size elements, one per isomorphism
// class, ordered by size and then canonical key. Elements are labeled so
// that 0 is the bottom, size-1 the top, and a <= b implies a <= b as
// integers.
std::vector<Lattice> enum_distributive_lattices(std::size_t max_size);
// The lattice with its residuum.
NuclearBrouwerian brouwerian(const Lattice& l, std::vector<Element> box = {});
// Every nucleus on b, in lexicographic order of the box table.
std::vector<std::vector<Element>> enum_nuclei(const NuclearBrouwerian& b);

struct ZooBase {
  NuclearBrouwerian algebra;
  std::size_t lattice = 0;  // index into the lattice list
  std::size_t nucleus = 0;  // index into enum_nuclei of that lattice
};

struct ZooModel {
  TwistStructure twist;
  std::size_t base = 0;
  bool qn4 = false;
  bool n4 = false;
  bool quasi_nelson = false;
  CanonicalKey key;
  // False when a loaded model file no longer equals the twist over its
  // recorded carrier; algebra() then returns the file's tables.
  bool matches_carrier = true;

  const FiniteAlgebra& algebra() const { return twist.algebra; }
};

struct ModelZoo {
  std::size_t base_size_bound = 0;
  std::size_t twist_bound = 0;
  std::vector<ZooBase> bases;
  // One model per isomorphism class; provenance is the first carrier met.
  std::vector<ZooModel> models;
  // Twist subalgebras counted as distinct carriers over the listed bases.
  std::size_t carrier_count = 0;
};

// Throws BoundExceeded, whose message reports progress, when some base has
// more fiber pairs than twist_bound.
ModelZoo build_zoo(std::size_t base_size_bound = 4, std::size_t twist_bound = 16);

// Directory layout: index.json plus bases/base_NNN.json and
// models/model_NNN.json in the algebra file format.
void save_zoo(const ModelZoo& zoo, const std::filesystem::path& dir);
ModelZoo load_zoo(const std::filesystem::path& dir);

}  // namespace qn4

#endif  // QN4_ENUMERATE_HPP_

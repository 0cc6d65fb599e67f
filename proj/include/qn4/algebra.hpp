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

// Finite algebras given by operation tables over the elements 0..n-1, and
// exhaustive checking of equations, quasi-equations and the QN4-lattice
// conditions.

#ifndef QN4_ALGEBRA_HPP_
#define QN4_ALGEBRA_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qn4/formula.hpp"

namespace qn4 {

using Element = std::uint16_t;

// Square operation table.
class Table {
 public:
  Table() = default;
  explicit Table(std::size_t n, Element fill = 0) : n_(n), cells_(n * n, fill) {}

  std::size_t size() const { return n_; }
  Element operator()(std::size_t a, std::size_t b) const { return cells_[a * n_ + b]; }
  Element& at(std::size_t a, std::size_t b) { return cells_[a * n_ + b]; }
  const std::vector<Element>& cells() const { return cells_; }

  static Table from_rows(const std::vector<std::vector<int>>& rows);
  std::vector<std::vector<int>> rows() const;

  friend bool operator==(const Table&, const Table&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Element> cells_;
};

// <A; /\, \/, ->, ~> of type <2, 2, 2, 1>.
struct FiniteAlgebra {
  std::size_t size = 0;
  Table meet, join, imp;
  std::vector<Element> neg;

  // Throws std::invalid_argument on wrong shapes or out-of-range entries.
  void validate() const;
  bool leq(Element a, Element b) const { return meet(a, b) == a; }
  friend bool operator==(const FiniteAlgebra&, const FiniteAlgebra&) = default;
};

// <B; /\, \/, ->, box>.
struct NuclearBrouwerian {
  std::size_t size = 0;
  Table meet, join, imp;
  std::vector<Element> box;

  void validate() const;
  bool leq(Element a, Element b) const { return meet(a, b) == a; }
  Element top() const;  // greatest element (a -> a)
  friend bool operator==(const NuclearBrouwerian&, const NuclearBrouwerian&) = default;
};

using Assignment = std::map<std::string, Element>;

struct QuasiEquation {
  std::vector<Equation> antecedents;
  Equation consequent;
};

struct Witness {
  Assignment assignment;
  std::optional<Element> lhs;
  std::optional<Element> rhs;
};

struct CheckReport {
  std::string law;
  bool passed = true;
  std::optional<Witness> witness;
  std::string detail;
  std::uint64_t assignments = 0;
  // Diagnostics that do not take part in the verdict.
  bool informational = false;

  explicit operator bool() const { return passed; }
};

struct CompositeReport {
  std::string subject;
  std::vector<CheckReport> items;

  bool passed() const;
  std::vector<std::string> violated() const;
  const CheckReport* find(const std::string& law) const;
  explicit operator bool() const { return passed(); }
};

// Homomorphic evaluation; throws UnboundVariable.
Element eval(const FiniteAlgebra& a, const Formula& f, const Assignment& v);

// Formula compiled against a fixed variable order, for hot loops.
class CompiledFormula {
 public:
  CompiledFormula(const Formula& f, const std::vector<std::string>& variables);
  Element operator()(const FiniteAlgebra& a, std::span<const Element> values,
                     std::vector<Element>& scratch) const;

 private:
  struct Instr {
    Kind op;
    std::uint32_t a;
    std::uint32_t b;
  };
  std::vector<Instr> code_;
};

// Assignments run through in lexicographic order of the sorted variable
// names (first name most significant); a failure carries the first
// counterexample in that order.
CheckReport check_equation(const FiniteAlgebra& a, const Equation& eq, std::string law = {});
CheckReport check_quasiequation(const FiniteAlgebra& a, const QuasiEquation& q, std::string law = {});
// Re-evaluates a witness; true iff it refutes eq.
bool refutes(const FiniteAlgebra& a, const Equation& eq, const Witness& w);
bool refutes(const FiniteAlgebra& a, const QuasiEquation& q, const Witness& w);

// Lattice-level checks straight from tables; witnesses use x, y, z.
CompositeReport is_lattice(const Table& meet, const Table& join);
CheckReport is_distributive(const Table& meet, const Table& join);
// b -> c := the largest a with a /\ b <= c, when it exists for every pair
// and satisfies residuation.
std::optional<Table> residuum_of(const Table& meet, const Table& join);
CompositeReport is_brouwerian(const Table& meet, const Table& join, const Table& imp);
CompositeReport is_nucleus(const Table& meet, const Table& join, const std::vector<Element>& box);

// a <= b iff a -> b = |a -> b|.
bool preceq(const FiniteAlgebra& a, Element x, Element y);
bool equivalent(const FiniteAlgebra& a, Element x, Element y);

struct Partition {
  std::vector<std::size_t> class_of;           // element -> class index
  std::vector<std::vector<Element>> classes;   // sorted by least member
};

class QuotientError : public std::runtime_error {
 public:
  enum class Reason { NotEquivalence, NotCongruence, NotBrouwerian, BoxNotWellDefined, BoxNotNucleus };
  QuotientError(Reason reason, const std::string& message, std::optional<std::pair<Element, Element>> pair = {});
  Reason reason() const { return reason_; }
  const std::optional<std::pair<Element, Element>>& pair() const { return pair_; }

 private:
  Reason reason_;
  std::optional<std::pair<Element, Element>> pair_;
};

// Throws QuotientError(NotEquivalence) when the relation is not an
// equivalence.
Partition equiv_classes(const FiniteAlgebra& a);

struct Quotient {
  NuclearBrouwerian algebra;  // B(A) with box [a] := [~~a]
  Partition partition;
};

Quotient quotient(const FiniteAlgebra& a);

// Items QN4a..QN4e.4 checked directly on the tables; every violated item is
// listed.
CompositeReport is_qn4_relational(const FiniteAlgebra& a);
// QN4a, QN4d, QN4e.1-4 and the ten identities, all as equations.
CompositeReport is_qn4_equational(const FiniteAlgebra& a);

CheckReport is_n4(const FiniteAlgebra& a);            // ~~x = x
CheckReport is_quasi_nelson(const FiniteAlgebra& a);  // x /\ ~x <= y

struct NamedEquation {
  std::string name;
  Equation equation;
};

// a <= b read as the equation a -> b = |a -> b|.
Equation preceq_equation(const Formula& a, const Formula& b);
std::vector<NamedEquation> lattice_equations();
std::vector<NamedEquation> qn4_identities();

}  // namespace qn4

#endif  // QN4_ALGEBRA_HPP_

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

// Formulas of the language {~, /\, \/, ->} plus the derived connectives
// <->, =>, <=> and |.|, which only exist until expand_derived() removes them.

#ifndef QN4_FORMULA_HPP_
#define QN4_FORMULA_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qn4 {

enum class Kind : std::uint8_t {
  Var,
  Neg,
  And,
  Or,
  Imp,
  // Derived; never produced by parse().
  Iff,        // a <-> b  :=  (a -> b) /\ (b -> a)
  StrongImp,  // a => b   :=  (a -> b) /\ (~b -> ~a)
  StrongIff,  // a <=> b  :=  (a => b) /\ (b => a)
  Abs,        // |a|      :=  a -> a
};

bool is_binary(Kind k);

// Immutable tree with shared subterms. Copying is cheap.
class Formula {
 public:
  static Formula var(std::string name);
  static Formula unary(Kind kind, Formula operand);
  static Formula binary(Kind kind, Formula lhs, Formula rhs);

  Kind kind() const;
  bool is_var() const { return kind() == Kind::Var; }
  const std::string& name() const;
  // Operand of Neg/Abs, or left operand of a binary node.
  const Formula& lhs() const;
  const Formula& rhs() const;
  const Formula& operand() const { return lhs(); }

  // True when no derived connective occurs anywhere in the tree.
  bool is_core() const;
  std::size_t depth() const;
  std::size_t size() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }
  friend bool operator<(const Formula& a, const Formula& b);
  friend int compare(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

int compare(const Formula& a, const Formula& b);

// Builders. conj/disj/imp/neg produce core nodes; the others are derived.
Formula var(std::string name);
Formula neg(Formula a);
Formula conj(Formula a, Formula b);
Formula disj(Formula a, Formula b);
Formula imp(Formula a, Formula b);
Formula iff(Formula a, Formula b);
Formula strong_imp(Formula a, Formula b);
Formula strong_iff(Formula a, Formula b);
Formula abs_of(Formula a);
// Already-expanded biconditional (a -> b) /\ (b -> a).
Formula biconditional(const Formula& a, const Formula& b);

using Substitution = std::map<std::string, Formula>;

struct Equation {
  Formula lhs;
  Formula rhs;
  friend bool operator==(const Equation&, const Equation&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class UnboundVariable : public std::runtime_error {
 public:
  explicit UnboundVariable(const std::string& name);
  const std::string& variable() const { return name_; }

 private:
  std::string name_;
};

// Parses and expands derived connectives; the result is always core.
Formula parse(std::string_view text);
// Keeps <->, =>, <=> and |.| as nodes.
Formula parse_extended(std::string_view text);
Equation parse_equation(std::string_view text);  // "lhs = rhs"; the glyph ≈ also works

std::string render(const Formula& f);
std::string render(const Equation& e);

Formula substitute(const Formula& f, const Substitution& s);
std::optional<Substitution> match_scheme(const Formula& scheme, const Formula& target);
Formula expand_derived(const Formula& f);

// Variables in order of first occurrence (left to right).
std::vector<std::string> variables(const Formula& f);
std::vector<std::string> variables(const Equation& e);
bool occurs(const std::string& name, const Formula& f);

}  // namespace qn4

#endif  // QN4_FORMULA_HPP_

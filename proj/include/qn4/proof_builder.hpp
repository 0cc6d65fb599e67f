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

#ifndef QN4_PROOF_BUILDER_HPP_
#define QN4_PROOF_BUILDER_HPP_

#include <functional>
#include <map>

#include "qn4/hilbert.hpp"

namespace qn4 {

// Incremental construction of proofs for the derivation catalog.
//
// Every helper appends ordinary proof lines, so whatever the builder emits is
// checked by check_proof() like any hand-written proof; the builder itself is
// untrusted. A line whose formula is already present is not repeated.
class ProofBuilder {
 public:
  using Line = std::size_t;

  ProofBuilder() = default;
  explicit ProofBuilder(std::vector<Formula> premises);

  const Formula& formula(Line l) const { return steps_.at(l).formula; }
  std::size_t size() const { return steps_.size(); }
  std::optional<Line> find(const Formula& f) const;

  // A line for f: the existing one, or a new premise.
  Line known(const Formula& f);
  Line premise(const Formula& f);
  Line axiom(AxiomId id, const Formula& instance);
  Line axiom(AxiomId id, const Substitution& s);
  Line mp(Line x, Line y);
  Line identity(const Formula& f);  // Lemma 1.1
  Line chain(Line ab, Line bc);     // Lemma 1.2

  Line and_intro(Line a, Line b);
  Line and_left(Line ab);
  Line and_right(Line ab);
  Line or_left(Line a, const Formula& b);
  Line or_right(const Formula& a, Line b);
  Line or_elim(Line a_or_b, Line a_to_c, Line b_to_c);

  // Runs `body` in a fresh builder whose extra premise is `hyp`, discharges
  // hyp with the deduction transformer and splices the result here. The body
  // reaches lines of this builder through known(formula(...)).
  Line assume(const Formula& hyp, const std::function<Line(ProofBuilder&, Line)>& body);

  // Splices a substitution instance of `proof`; its premises are resolved
  // against existing lines or become premises of this builder.
  Line use(const Proof& proof, const Substitution& s = {});

  const std::vector<Formula>& premises() const { return premises_; }
  // The proof concluding with line `conclusion` (default: the last line).
  Proof build() const;
  Proof build(Line conclusion) const;

 private:
  Line push(const Formula& f, Justification j);

  std::vector<Formula> premises_;
  std::vector<ProofStep> steps_;
  std::map<Formula, Line> index_;
};

}  // namespace qn4

#endif  // QN4_PROOF_BUILDER_HPP_

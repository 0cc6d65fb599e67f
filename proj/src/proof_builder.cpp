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

#include "qn4/proof_builder.hpp"

#include <algorithm>

namespace qn4 {

ProofBuilder::ProofBuilder(std::vector<Formula> premises) : premises_(std::move(premises)) {}

std::optional<ProofBuilder::Line> ProofBuilder::find(const Formula& f) const {
  auto it = index_.find(f);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ProofBuilder::Line ProofBuilder::push(const Formula& f, Justification j) {
  if (auto existing = find(f)) return *existing;
  steps_.push_back({f, std::move(j)});
  index_.emplace(f, steps_.size() - 1);
  return steps_.size() - 1;
}

ProofBuilder::Line ProofBuilder::known(const Formula& f) {
  if (auto existing = find(f)) return *existing;
  return premise(f);
}

ProofBuilder::Line ProofBuilder::premise(const Formula& f) {
  if (std::find(premises_.begin(), premises_.end(), f) == premises_.end()) premises_.push_back(f);
  return push(f, PremiseRule{});
}

ProofBuilder::Line ProofBuilder::axiom(AxiomId id, const Formula& instance) {
  if (!match_scheme(scheme_of(id), instance))
    throw ProofError(render(instance) + " is not an instance of " + axiom_name(id));
  return push(instance, AxiomRule{id, {}});
}

ProofBuilder::Line ProofBuilder::axiom(AxiomId id, const Substitution& s) {
  return push(substitute(scheme_of(id), s), AxiomRule{id, s});
}

ProofBuilder::Line ProofBuilder::mp(Line x, Line y) {
  const Formula fx = formula(x);
  const Formula fy = formula(y);
  if (fy.kind() == Kind::Imp && fy.lhs() == fx) return push(fy.rhs(), MpRule{x, y});
  if (fx.kind() == Kind::Imp && fx.lhs() == fy) return push(fx.rhs(), MpRule{x, y});
  throw ProofError("MP does not apply to " + render(fx) + " and " + render(fy));
}

ProofBuilder::Line ProofBuilder::identity(const Formula& f) {
  return push(imp(f, f), LemmaRule{LemmaId::Identity, {}});
}

ProofBuilder::Line ProofBuilder::chain(Line ab, Line bc) {
  const Formula fab = formula(ab);
  const Formula fbc = formula(bc);
  if (fab.kind() != Kind::Imp || fbc.kind() != Kind::Imp || fab.rhs() != fbc.lhs())
    throw ProofError("cannot chain " + render(fab) + " with " + render(fbc));
  return push(imp(fab.lhs(), fbc.rhs()), LemmaRule{LemmaId::Chain, {ab, bc}});
}

ProofBuilder::Line ProofBuilder::and_intro(Line a, Line b) {
  const Formula fa = formula(a);
  const Formula fb = formula(b);
  Line aa = identity(fa);
  Line ab = mp(b, axiom(AxiomId::Ax1, imp(fb, imp(fa, fb))));
  Line ax5 = axiom(AxiomId::Ax5, imp(imp(fa, fa), imp(imp(fa, fb), imp(fa, conj(fa, fb)))));
  return mp(a, mp(ab, mp(aa, ax5)));
}

ProofBuilder::Line ProofBuilder::and_left(Line ab) {
  const Formula f = formula(ab);
  if (f.kind() != Kind::And) throw ProofError("and_left on " + render(f));
  return mp(ab, axiom(AxiomId::Ax3, imp(f, f.lhs())));
}

ProofBuilder::Line ProofBuilder::and_right(Line ab) {
  const Formula f = formula(ab);
  if (f.kind() != Kind::And) throw ProofError("and_right on " + render(f));
  return mp(ab, axiom(AxiomId::Ax4, imp(f, f.rhs())));
}

ProofBuilder::Line ProofBuilder::or_left(Line a, const Formula& b) {
  const Formula fa = formula(a);
  return mp(a, axiom(AxiomId::Ax6, imp(fa, disj(fa, b))));
}

ProofBuilder::Line ProofBuilder::or_right(const Formula& a, Line b) {
  const Formula fb = formula(b);
  return mp(b, axiom(AxiomId::Ax7, imp(fb, disj(a, fb))));
}

ProofBuilder::Line ProofBuilder::or_elim(Line a_or_b, Line a_to_c, Line b_to_c) {
  const Formula ab = formula(a_or_b);
  const Formula ac = formula(a_to_c);
  const Formula bc = formula(b_to_c);
  if (ab.kind() != Kind::Or || ac.kind() != Kind::Imp || bc.kind() != Kind::Imp ||
      ac.lhs() != ab.lhs() || bc.lhs() != ab.rhs() || ac.rhs() != bc.rhs())
    throw ProofError("or_elim shapes do not fit");
  Line ax8 = axiom(AxiomId::Ax8, imp(ac, imp(bc, imp(ab, ac.rhs()))));
  return mp(a_or_b, mp(b_to_c, mp(a_to_c, ax8)));
}

ProofBuilder::Line ProofBuilder::assume(const Formula& hyp,
                                        const std::function<Line(ProofBuilder&, Line)>& body) {
  ProofBuilder inner;
  Line h = inner.premise(hyp);
  Line result = body(inner, h);
  return use(deduction(inner.build(result), hyp));
}

ProofBuilder::Line ProofBuilder::use(const Proof& proof, const Substitution& s) {
  const Proof q = s.empty() ? proof : instantiate(proof, s);
  std::vector<Line> where(q.steps.size());
  for (std::size_t k = 0; k < q.steps.size(); ++k) {
    const ProofStep& step = q.steps[k];
    if (std::holds_alternative<PremiseRule>(step.rule)) {
      where[k] = known(step.formula);
      continue;
    }
    Justification j = step.rule;
    if (auto* mp = std::get_if<MpRule>(&j)) {
      mp->first = where.at(mp->first);
      mp->second = where.at(mp->second);
    } else if (auto* lem = std::get_if<LemmaRule>(&j)) {
      for (auto& r : lem->refs) r = where.at(r);
    }
    where[k] = push(step.formula, j);
  }
  return where.back();
}

Proof ProofBuilder::build() const {
  if (steps_.empty()) throw ProofError("nothing has been derived");
  return build(steps_.size() - 1);
}

Proof ProofBuilder::build(Line conclusion) const {
  Proof p;
  p.premises = premises_;
  p.steps = steps_;
  if (conclusion + 1 != p.steps.size()) {
    // Repeat the justification so that the wanted line is last.
    p.steps.push_back(steps_.at(conclusion));
  }
  return p;
}

}  // namespace qn4

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

#include "qn4/catalog.hpp"

#include "qn4/proof_builder.hpp"
#include "qn4/proof_io.hpp"

namespace qn4 {

namespace {

using Line = ProofBuilder::Line;
using A = AxiomId;

Formula F(std::string_view s) { return parse(s); }

const Formula a = var("a"), b = var("b"), c = var("c");

// ---------------------------------------------------------------------------
// Small tactics. Each one only appends ordinary lines.

// The instance of `id` whose antecedent is `lhs`.
Line ax_on(ProofBuilder& B, AxiomId id, const Formula& lhs) {
  const Formula& s = scheme_of(id);
  auto sub = match_scheme(s.lhs(), lhs);
  if (!sub) throw ProofError(render(lhs) + " is not the antecedent of " + axiom_name(id));
  return B.axiom(id, substitute(s, *sub));
}

Line fwd(ProofBuilder& B, AxiomId id, Line x) { return B.mp(x, ax_on(B, id, B.formula(x))); }

Line then(ProofBuilder& B, Line xy, AxiomId id) { return B.chain(xy, ax_on(B, id, B.formula(xy).rhs())); }

// x -> y, x -> z  gives  x -> y /\ z
Line imp_and(ProofBuilder& B, Line xy, Line xz) {
  const Formula f = B.formula(xy), g = B.formula(xz);
  Line ax = B.axiom(A::Ax5, {{"a", f.lhs()}, {"b", f.rhs()}, {"c", g.rhs()}});
  return B.mp(xz, B.mp(xy, ax));
}

// x -> x', y -> y'  gives  x /\ y -> x' /\ y'
Line and_mono(ProofBuilder& B, Line xx, Line yy) {
  const Formula x = B.formula(xx).lhs(), y = B.formula(yy).lhs();
  Line l = B.chain(B.axiom(A::Ax3, {{"a", x}, {"b", y}}), xx);
  Line r = B.chain(B.axiom(A::Ax4, {{"a", x}, {"b", y}}), yy);
  return imp_and(B, l, r);
}

// x -> y  gives  ~~x -> ~~y
Line dn_mono(ProofBuilder& B, Line xy) {
  const Formula f = B.formula(xy);
  return B.mp(xy, B.axiom(A::Ax17, {{"a", f.lhs()}, {"b", f.rhs()}}));
}

// x -> ~m  gives  ~~x -> ~m
Line dn_collapse(ProofBuilder& B, Line xy) {
  const Formula m = B.formula(xy).rhs().operand();
  return B.chain(dn_mono(B, xy), B.axiom(A::Ax22, {{"a", m}}));
}

// ~x -> ~m, ~y -> ~m  gives  ~(x /\ y) -> ~m
Line lub(ProofBuilder& B, Line xm, Line ym) {
  const Formula x = B.formula(xm).lhs().operand(), y = B.formula(ym).lhs().operand();
  const Formula m = B.formula(xm).rhs().operand();
  Line ax = B.axiom(A::Ax21, {{"a", x}, {"b", m}, {"c", y}, {"d", m}});
  Line mm = B.mp(ym, B.mp(xm, ax));
  Line idem = B.mp(B.identity(neg(m)), B.axiom(A::Ax20, {{"a", m}, {"b", m}}));
  return B.chain(mm, idem);
}

// ~y -> ~(x /\ y)
Line neg_into_right(ProofBuilder& B, const Formula& y, const Formula& x) {
  return B.chain(B.axiom(A::Ax18, {{"a", y}, {"b", x}}), B.axiom(A::Ax19, {{"a", y}, {"b", x}}));
}

// ---------------------------------------------------------------------------

std::vector<Formula> gamma() {
  std::vector<Formula> out;
  for (const auto& f : delta(var("a1"), var("b1"))) out.push_back(f);
  for (const auto& f : delta(var("a2"), var("b2"))) out.push_back(f);
  return out;
}

// The same derivation with the a's and b's exchanged; the premise set is
// invariant under the exchange.
Proof swapped(const Proof& p) {
  Proof q = instantiate(p, {{"a1", var("b1")}, {"b1", var("a1")}, {"a2", var("b2")}, {"b2", var("a2")}});
  q.premises = gamma();
  return q;
}

Proof swap_ab(const Proof& p) { return instantiate(p, {{"a", b}, {"b", a}}); }

Proof single(AxiomId id, const Substitution& s) {
  ProofBuilder B;
  B.axiom(id, s);
  return B.build();
}

Proof table(std::vector<std::string> premises, std::vector<TableRow> rows) {
  return proof_from_rows(premises, rows);
}

Proof table_gamma(std::vector<TableRow> rows) {
  Proof p = proof_from_rows({}, rows);
  p.premises = gamma();
  return p;
}

// ---------------------------------------------------------------------------
// Tables.

Proof alg_iv() {
  return table({"a"}, {
                          {"a", "Premise"},
                          {"~(a -> a) -> ~~(a /\\ ~a)", "Ax10 (->)"},
                          {"~~(a /\\ ~a) -> (~~a /\\ ~~~a)", "Ax14 (->)"},
                          {"~(a -> a) -> (~~a /\\ ~~~a)", "Lemma 1.2, 2, 3"},
                          {"(~~a /\\ ~~~a) -> ~~~a", "Ax4"},
                          {"~(a -> a) -> ~~~a", "Lemma 1.2, 4, 5"},
                          {"~~~a -> ~a", "Ax22"},
                          {"~(a -> a) -> ~a", "Lemma 1.2, 6, 7"},
                      });
}

Proof cong_and_5() {
  return table_gamma({
      {"a1 -> b1", "Premise"},
      {"a2 -> b2", "Premise"},
      {"(a1 /\\ a2) -> a1", "Ax3"},
      {"(a1 /\\ a2) -> b1", "Lemma 1.2, 1, 3"},
      {"(a1 /\\ a2) -> a2", "Ax4"},
      {"(a1 /\\ a2) -> b2", "Lemma 1.2, 2, 5"},
      {"((a1 /\\ a2) -> b1) -> (((a1 /\\ a2) -> b2) -> ((a1 /\\ a2) -> (b1 /\\ b2)))", "Ax5"},
      {"((a1 /\\ a2) -> b2) -> ((a1 /\\ a2) -> (b1 /\\ b2))", "MP, 4, 7"},
      {"(a1 /\\ a2) -> (b1 /\\ b2)", "MP, 6, 8"},
  });
}

Proof cong_or_neg_11() {
  const std::string phi = "(~a1 /\\ ~a2)";
  return table_gamma({
      {"~a1 -> ~b1", "Premise"},
      {"~a2 -> ~b2", "Premise"},
      {phi + " -> ~a1", "Ax3"},
      {"(~a1 /\\ ~a2) -> ~b1", "Lemma 1.2, 1, 3"},
      {"(~a1 /\\ ~a2) -> ~a2", "Ax4"},
      {"(~a1 /\\ ~a2) -> ~b2", "Lemma 1.2, 2, 5"},
      {"(" + phi + " -> ~b1) -> ((" + phi + " -> ~b2) -> (" + phi + " -> (~b1 /\\ ~b2)))", "Ax5"},
      {"(" + phi + " -> ~b2) -> (" + phi + " -> (~b1 /\\ ~b2))", "MP, 4, 7"},
      {"(~a1 /\\ ~a2) -> (~b1 /\\ ~b2)", "MP, 6, 8"},
      {"~(a1 \\/ a2) -> (~a1 /\\ ~a2)", "Ax9 (->)"},
      {"~(a1 \\/ a2) -> (~b1 /\\ ~b2)", "Lemma 1.2, 9, 10"},
      {"(~b1 /\\ ~b2) -> ~(b1 \\/ b2)", "Ax9 (<-)"},
      {"~(a1 \\/ a2) -> ~(b1 \\/ b2)", "Lemma 1.2, 11, 12"},
  });
}

Proof cong_imp_neg_15() {
  const std::string k = "(~~a1 /\\ ~~~a2)";
  const std::string phi = "(" + k + " -> ~~b1)";
  const std::string psi = "(" + k + " -> ~~~b2)";
  return table_gamma({
      {"a1 -> b1", "Premise"},
      {"~a2 -> ~b2", "Premise"},
      {"(a1 -> b1) -> (~~a1 -> ~~b1)", "Ax17"},
      {"~~a1 -> ~~b1", "MP, 1, 3"},
      {k + " -> ~~a1", "Ax3"},
      {phi, "Lemma 1.2, 4, 5"},
      {"(~a2 -> ~b2) -> (~~~a2 -> ~~~b2)", "Ax17"},
      {"~~~a2 -> ~~~b2", "MP, 2, 7"},
      {k + " -> ~~~a2", "Ax4"},
      {psi, "Lemma 1.2, 8, 9"},
      {phi + " -> (" + psi + " -> (" + k + " -> (~~b1 /\\ ~~~b2)))", "Ax5"},
      {psi + " -> (" + k + " -> (~~b1 /\\ ~~~b2))", "MP, 6, 11"},
      {k + " -> (~~b1 /\\ ~~~b2)", "MP, 10, 12"},
      {"~~(a1 /\\ ~a2) -> " + k, "Ax14 (->)"},
      {"~~(a1 /\\ ~a2) -> (~~b1 /\\ ~~~b2)", "Lemma 1.2, 13, 14"},
      {"(~~b1 /\\ ~~~b2) -> ~~(b1 /\\ ~b2)", "Ax14 (<-)"},
      {"~~(a1 /\\ ~a2) -> ~~(b1 /\\ ~b2)", "Lemma 1.2, 15, 16"},
      {"~(a1 -> a2) -> ~~(a1 /\\ ~a2)", "Ax10 (->)"},
      {"~(a1 -> a2) -> ~~(b1 /\\ ~b2)", "Lemma 1.2, 17, 18"},
      {"~~(b1 /\\ ~b2) -> ~(b1 -> b2)", "Ax10 (<-)"},
      {"~(a1 -> a2) -> ~(b1 -> b2)", "Lemma 1.2, 19, 20"},
  });
}

Proof comm_and_a() {
  return table({}, {
                       {"((a /\\ b) -> b) -> (((a /\\ b) -> a) -> ((a /\\ b) -> (b /\\ a)))", "Ax5"},
                       {"(a /\\ b) -> b", "Ax4"},
                       {"((a /\\ b) -> a) -> ((a /\\ b) -> (b /\\ a))", "MP, 1, 2"},
                       {"(a /\\ b) -> a", "Ax3"},
                       {"(a /\\ b) -> (b /\\ a)", "MP, 3, 4"},
                   });
}

Proof absorp_and_b() {
  return table({}, {
                       {"(a -> a) -> ((a -> (a \\/ b)) -> (a -> (a /\\ (a \\/ b))))", "Ax5"},
                       {"a -> a", "Lemma 1.1"},
                       {"(a -> (a \\/ b)) -> (a -> (a /\\ (a \\/ b)))", "MP, 1, 2"},
                       {"a -> (a \\/ b)", "Ax6"},
                       {"a -> (a /\\ (a \\/ b))", "MP, 3, 4"},
                   });
}

Proof absorp_and_c() {
  return table({}, {
                       {"~(a /\\ (a \\/ b)) -> ~((a /\\ a) \\/ (a /\\ b))", "Ax12 (->)"},
                       {"~((a /\\ a) \\/ (a /\\ b)) -> (~(a /\\ a) /\\ ~(a /\\ b))", "Ax9 (->)"},
                       {"~(a /\\ (a \\/ b)) -> (~(a /\\ a) /\\ ~(a /\\ b))", "Lemma 1.2, 1, 2"},
                       {"(~(a /\\ a) /\\ ~(a /\\ b)) -> ~(a /\\ a)", "Ax3"},
                       {"~(a /\\ (a \\/ b)) -> ~(a /\\ a)", "Lemma 1.2, 3, 4"},
                       {"(~a -> ~a) -> (~(a /\\ a) -> ~a)", "Ax20"},
                       {"~a -> ~a", "Lemma 1.1"},
                       {"~(a /\\ a) -> ~a", "MP, 6, 7"},
                       {"~(a /\\ (a \\/ b)) -> ~a", "Lemma 1.2, 5, 8"},
                   });
}

Proof assoc_and_a() {
  const std::string x = "(a /\\ (b /\\ c))";
  return table({}, {
                       {"(" + x + " -> (a /\\ b)) -> ((" + x + " -> c) -> (" + x + " -> ((a /\\ b) /\\ c)))", "Ax5"},
                       {x + " -> a", "Ax3"},
                       {x + " -> (b /\\ c)", "Ax4"},
                       {"(b /\\ c) -> b", "Ax3"},
                       {x + " -> b", "Lemma 1.2, 3, 4"},
                       {"(" + x + " -> a) -> ((" + x + " -> b) -> (" + x + " -> (a /\\ b)))", "Ax5"},
                       {"(" + x + " -> b) -> (" + x + " -> (a /\\ b))", "MP, 2, 6"},
                       {x + " -> (a /\\ b)", "MP, 5, 7"},
                       {"(" + x + " -> c) -> (" + x + " -> ((a /\\ b) /\\ c))", "MP, 1, 8"},
                       {"(b /\\ c) -> c", "Ax4"},
                       {x + " -> c", "Lemma 1.2, 3, 10"},
                       {x + " -> ((a /\\ b) /\\ c)", "MP, 9, 11"},
                   });
}

Proof assoc_and_b() {
  const std::string y = "((a /\\ b) /\\ c)";
  return table({}, {
                       {"(" + y + " -> a) -> ((" + y + " -> (b /\\ c)) -> (" + y + " -> (a /\\ (b /\\ c))))", "Ax5"},
                       {y + " -> (a /\\ b)", "Ax3"},
                       {"(a /\\ b) -> a", "Ax3"},
                       {y + " -> a", "Lemma 1.2, 2, 3"},
                       {"(" + y + " -> (b /\\ c)) -> (" + y + " -> (a /\\ (b /\\ c)))", "MP, 1, 4"},
                       {y + " -> c", "Ax4"},
                       {"(a /\\ b) -> b", "Ax4"},
                       {y + " -> b", "Lemma 1.2, 2, 7"},
                       {"(" + y + " -> b) -> ((" + y + " -> c) -> (" + y + " -> (b /\\ c)))", "Ax5"},
                       {"(" + y + " -> c) -> (" + y + " -> (b /\\ c))", "MP, 8, 9"},
                       {y + " -> (b /\\ c)", "MP, 6, 10"},
                       {y + " -> (a /\\ (b /\\ c))", "MP 5, 11"},
                   });
}

// ---------------------------------------------------------------------------
// Algebraizability conditions.

Proof ref_imp() {
  ProofBuilder B;
  B.identity(a);
  return B.build();
}

Proof ref_neg() {
  ProofBuilder B;
  B.identity(neg(a));
  return B.build();
}

Proof mp_rule() {
  auto d = delta(a, b);
  std::vector<Formula> premises{a};
  premises.insert(premises.end(), d.begin(), d.end());
  ProofBuilder B(premises);
  B.mp(B.premise(a), B.premise(imp(a, b)));
  return B.build();
}

Proof alg_i() {
  ProofBuilder B({a});
  B.axiom(A::Ax1, F("a -> a -> a"));
  return B.build();
}

Proof alg_ii() {
  ProofBuilder B({a});
  B.mp(B.premise(a), B.axiom(A::Ax1, F("a -> (a -> a) -> a")));
  return B.build();
}

Proof alg_iii() {
  ProofBuilder B({a});
  B.mp(B.premise(a), B.axiom(A::Ax16, F("a -> ~a -> ~(a -> a)")));
  return B.build();
}

Proof alg_converse() {
  auto d = delta(a, imp(a, a));
  ProofBuilder B({d.begin(), d.end()});
  B.mp(B.identity(a), B.premise(F("(a -> a) -> a")));
  return B.build();
}

Proof cong_neg(int item) {
  auto d = delta(a, b);
  ProofBuilder B({d.begin(), d.end()});
  switch (item) {
    case 1: B.premise(F("~a -> ~b")); break;
    case 2: B.premise(F("~b -> ~a")); break;
    case 3: B.mp(B.premise(F("a -> b")), B.axiom(A::Ax17, {{"a", a}, {"b", b}})); break;
    default: B.mp(B.premise(F("b -> a")), B.axiom(A::Ax17, {{"a", b}, {"b", a}})); break;
  }
  return B.build();
}

Proof cong_and_7() {
  ProofBuilder B(gamma());
  Line ax = B.axiom(A::Ax21, {{"a", var("a1")}, {"b", var("b1")}, {"c", var("a2")}, {"d", var("b2")}});
  B.mp(B.premise(F("~a2 -> ~b2")), B.mp(B.premise(F("~a1 -> ~b1")), ax));
  return B.build();
}

Proof cong_or_9() {
  ProofBuilder B(gamma());
  const Formula b1 = var("b1"), b2 = var("b2");
  Line l1 = B.chain(B.premise(F("a1 -> b1")), B.axiom(A::Ax6, {{"a", b1}, {"b", b2}}));
  Line l2 = B.chain(B.premise(F("a2 -> b2")), B.axiom(A::Ax7, {{"a", b1}, {"b", b2}}));
  Line ax = B.axiom(A::Ax8, {{"a", var("a1")}, {"b", var("a2")}, {"c", disj(b1, b2)}});
  B.mp(l2, B.mp(l1, ax));
  return B.build();
}

Proof cong_imp_13() {
  ProofBuilder B(gamma());
  const Formula back = F("b1 -> a1"), ahead = F("a2 -> b2");
  B.premise(back);
  B.premise(ahead);
  Line r = B.assume(F("a1 -> a2"), [&](ProofBuilder& P, Line h) {
    return P.chain(P.chain(P.known(back), h), P.known(ahead));
  });
  return B.build(r);
}

// ---------------------------------------------------------------------------
// Lattice laws.

Proof idem_and_b() {
  ProofBuilder B;
  Line id = B.identity(a);
  B.mp(id, B.mp(id, B.axiom(A::Ax5, {{"a", a}, {"b", a}, {"c", a}})));
  return B.build();
}

Proof idem_and_c() {
  ProofBuilder B;
  B.mp(B.identity(neg(a)), B.axiom(A::Ax20, {{"a", a}, {"b", a}}));
  return B.build();
}

Proof idem_or_a() {
  ProofBuilder B;
  Line id = B.identity(a);
  B.mp(id, B.mp(id, B.axiom(A::Ax8, {{"a", a}, {"b", a}, {"c", a}})));
  return B.build();
}

Proof idem_or_c() {
  ProofBuilder B;
  then(B, ax_on(B, A::Ax9Fwd, F("~(a \\/ a)")), A::Ax3);
  return B.build();
}

Proof idem_or_d() {
  ProofBuilder B;
  Line id = B.identity(neg(a));
  then(B, imp_and(B, id, id), A::Ax9Bwd);
  return B.build();
}

Proof comm_or_a() {
  ProofBuilder B;
  Line ax = B.axiom(A::Ax8, {{"a", a}, {"b", b}, {"c", disj(b, a)}});
  Line l = B.axiom(A::Ax7, {{"a", b}, {"b", a}});
  Line r = B.axiom(A::Ax6, {{"a", b}, {"b", a}});
  B.mp(r, B.mp(l, ax));
  return B.build();
}

Proof comm_or_c() {
  ProofBuilder B;
  Line l = ax_on(B, A::Ax9Fwd, F("~(a \\/ b)"));
  l = B.chain(l, B.use(comm_and_a(), {{"a", neg(a)}, {"b", neg(b)}}));
  then(B, l, A::Ax9Bwd);
  return B.build();
}

Proof absorp_or_a() {
  ProofBuilder B;
  Line ax = B.axiom(A::Ax8, {{"a", a}, {"b", conj(a, b)}, {"c", a}});
  B.mp(B.axiom(A::Ax3, {{"a", a}, {"b", b}}), B.mp(B.identity(a), ax));
  return B.build();
}

Proof absorp_or_c() {
  ProofBuilder B;
  then(B, ax_on(B, A::Ax9Fwd, F("~(a \\/ a /\\ b)")), A::Ax3);
  return B.build();
}

Proof absorp_or_d() {
  ProofBuilder B;
  Line l = imp_and(B, B.identity(neg(a)), B.axiom(A::Ax18, {{"a", a}, {"b", b}}));
  then(B, l, A::Ax9Bwd);
  return B.build();
}

Proof assoc_or_a() {
  ProofBuilder B;
  const Formula t = F("(a \\/ b) \\/ c");
  Line ab_t = B.axiom(A::Ax6, {{"a", disj(a, b)}, {"b", c}});
  Line a_t = B.chain(B.axiom(A::Ax6, {{"a", a}, {"b", b}}), ab_t);
  Line b_t = B.chain(B.axiom(A::Ax7, {{"a", a}, {"b", b}}), ab_t);
  Line c_t = B.axiom(A::Ax7, {{"a", disj(a, b)}, {"b", c}});
  Line bc_t = B.mp(c_t, B.mp(b_t, B.axiom(A::Ax8, {{"a", b}, {"b", c}, {"c", t}})));
  B.mp(bc_t, B.mp(a_t, B.axiom(A::Ax8, {{"a", a}, {"b", disj(b, c)}, {"c", t}})));
  return B.build();
}

Proof assoc_or_b() {
  ProofBuilder B;
  const Formula x = F("a \\/ (b \\/ c)");
  Line bc_x = B.axiom(A::Ax7, {{"a", a}, {"b", disj(b, c)}});
  Line a_x = B.axiom(A::Ax6, {{"a", a}, {"b", disj(b, c)}});
  Line b_x = B.chain(B.axiom(A::Ax6, {{"a", b}, {"b", c}}), bc_x);
  Line c_x = B.chain(B.axiom(A::Ax7, {{"a", b}, {"b", c}}), bc_x);
  Line ab_x = B.mp(b_x, B.mp(a_x, B.axiom(A::Ax8, {{"a", a}, {"b", b}, {"c", x}})));
  B.mp(c_x, B.mp(ab_x, B.axiom(A::Ax8, {{"a", disj(a, b)}, {"b", c}, {"c", x}})));
  return B.build();
}

Proof assoc_or_c() {
  ProofBuilder B;
  Line l = ax_on(B, A::Ax9Fwd, F("~(a \\/ (b \\/ c))"));
  l = B.chain(l, and_mono(B, B.identity(neg(a)), ax_on(B, A::Ax9Fwd, F("~(b \\/ c)"))));
  l = B.chain(l, B.use(assoc_and_a(), {{"a", neg(a)}, {"b", neg(b)}, {"c", neg(c)}}));
  l = B.chain(l, and_mono(B, ax_on(B, A::Ax9Bwd, F("~a /\\ ~b")), B.identity(neg(c))));
  then(B, l, A::Ax9Bwd);
  return B.build();
}

Proof assoc_or_d() {
  ProofBuilder B;
  Line l = ax_on(B, A::Ax9Fwd, F("~((a \\/ b) \\/ c)"));
  l = B.chain(l, and_mono(B, ax_on(B, A::Ax9Fwd, F("~(a \\/ b)")), B.identity(neg(c))));
  l = B.chain(l, B.use(assoc_and_b(), {{"a", neg(a)}, {"b", neg(b)}, {"c", neg(c)}}));
  l = B.chain(l, and_mono(B, B.identity(neg(a)), ax_on(B, A::Ax9Bwd, F("~b /\\ ~c"))));
  then(B, l, A::Ax9Bwd);
  return B.build();
}

Proof dist_and_a() {
  ProofBuilder B;
  const Formula ab = conj(a, b), ac = conj(a, c);
  Line r = B.assume(F("a /\\ (b \\/ c)"), [&](ProofBuilder& P, Line h) {
    P.and_left(h);
    Line bc = P.and_right(h);
    Line lb = P.assume(b, [&](ProofBuilder& Q, Line y) { return Q.or_left(Q.and_intro(Q.known(a), y), ac); });
    Line lc = P.assume(c, [&](ProofBuilder& Q, Line z) { return Q.or_right(ab, Q.and_intro(Q.known(a), z)); });
    return P.or_elim(bc, lb, lc);
  });
  return B.build(r);
}

Proof dist_and_b() {
  ProofBuilder B;
  Line id = B.identity(a);
  Line l = and_mono(B, id, B.axiom(A::Ax6, {{"a", b}, {"b", c}}));
  Line r = and_mono(B, id, B.axiom(A::Ax7, {{"a", b}, {"b", c}}));
  Line ax = B.axiom(A::Ax8, {{"a", conj(a, b)}, {"b", conj(a, c)}, {"c", F("a /\\ (b \\/ c)")}});
  B.mp(r, B.mp(l, ax));
  return B.build();
}

Proof dist_or_a() {
  ProofBuilder B;
  Line l = imp_and(B, B.axiom(A::Ax6, {{"a", a}, {"b", b}}), B.axiom(A::Ax6, {{"a", a}, {"b", c}}));
  Line r = and_mono(B, B.axiom(A::Ax7, {{"a", a}, {"b", b}}), B.axiom(A::Ax7, {{"a", a}, {"b", c}}));
  Line ax = B.axiom(A::Ax8, {{"a", a}, {"b", conj(b, c)}, {"c", F("(a \\/ b) /\\ (a \\/ c)")}});
  B.mp(r, B.mp(l, ax));
  return B.build();
}

Proof dist_or_b() {
  ProofBuilder B;
  const Formula bc = conj(b, c), a_or_c = disj(a, c);
  Line r = B.assume(F("(a \\/ b) /\\ (a \\/ c)"), [&](ProofBuilder& P, Line h) {
    Line ab = P.and_left(h);
    P.and_right(h);
    Line la = P.axiom(A::Ax6, {{"a", a}, {"b", bc}});
    Line lb = P.assume(b, [&](ProofBuilder& Q, Line) {
      Line qa = Q.axiom(A::Ax6, {{"a", a}, {"b", bc}});
      Line qc = Q.assume(c, [&](ProofBuilder& R, Line z) { return R.or_right(a, R.and_intro(R.known(b), z)); });
      return Q.or_elim(Q.known(a_or_c), qa, qc);
    });
    return P.or_elim(ab, la, lb);
  });
  return B.build(r);
}

// ---------------------------------------------------------------------------
// The ten identities of the equational presentation; a, b, c play x, y, z.

Proof ident_1a() {
  ProofBuilder B;
  Line r = B.assume(F("(a -> a) -> b"), [&](ProofBuilder& P, Line h) { return P.mp(P.identity(a), h); });
  return B.build(r);
}

Proof ident_1c() {
  ProofBuilder B;
  Line l = ax_on(B, A::Ax10Fwd, F("~((a -> a) -> b)"));
  l = then(B, l, A::Ax14Fwd);
  l = then(B, l, A::Ax4);
  then(B, l, A::Ax22);
  return B.build();
}

Proof ident_1d() {
  ProofBuilder B;
  const Formula t = imp(a, a);
  Line nnt = B.mp(B.identity(a), B.axiom(A::Ax15, {{"a", t}}));
  Line l = B.mp(nnt, B.axiom(A::Ax1, {{"a", neg(neg(t))}, {"b", neg(b)}}));
  Line r = B.axiom(A::Ax15, {{"a", neg(b)}});
  Line k = imp_and(B, l, r);
  k = then(B, k, A::Ax14Bwd);
  then(B, k, A::Ax10Bwd);
  return B.build();
}

Proof ident_3a() {
  ProofBuilder B;
  const Formula hyp = F("a /\\ b -> c");
  Line r = B.assume(hyp, [&](ProofBuilder& P, Line) {
    return P.assume(a, [&](ProofBuilder& Q, Line) {
      return Q.assume(b, [&](ProofBuilder& R, Line y) {
        return R.mp(R.and_intro(R.known(a), y), R.known(hyp));
      });
    });
  });
  return B.build(r);
}

Proof ident_3b() {
  ProofBuilder B;
  const Formula hyp = F("a -> b -> c");
  Line r = B.assume(hyp, [&](ProofBuilder& P, Line) {
    return P.assume(conj(a, b), [&](ProofBuilder& Q, Line h) {
      Line bc = Q.mp(Q.and_left(h), Q.known(hyp));
      return Q.mp(Q.and_right(h), bc);
    });
  });
  return B.build(r);
}

Proof ident_3c() {
  ProofBuilder B;
  Line l = ax_on(B, A::Ax10Fwd, F("~(a /\\ b -> c)"));
  Line inner = B.assume(F("(a /\\ b) /\\ ~c"), [&](ProofBuilder& P, Line h) {
    Line ab = P.and_left(h);
    Line x = P.and_left(ab);
    Line y = P.and_intro(P.and_right(ab), P.and_right(h));
    y = fwd(P, A::Ax15, y);
    y = fwd(P, A::Ax10Bwd, y);
    return P.and_intro(x, y);
  });
  l = B.chain(l, dn_mono(B, inner));
  then(B, l, A::Ax10Bwd);
  return B.build();
}

Proof ident_3d() {
  ProofBuilder B;
  Line l = ax_on(B, A::Ax10Fwd, F("~(a -> b -> c)"));
  Line inner = B.assume(F("~~(a /\\ ~(b -> c))"), [&](ProofBuilder& P, Line h) {
    Line t = fwd(P, A::Ax14Fwd, h);
    Line nna = P.and_left(t);
    Line u = fwd(P, A::Ax22, P.and_right(t));
    u = fwd(P, A::Ax10Fwd, u);
    u = fwd(P, A::Ax14Fwd, u);
    Line nnab = fwd(P, A::Ax14Bwd, P.and_intro(nna, P.and_left(u)));
    return fwd(P, A::Ax14Bwd, P.and_intro(nnab, P.and_right(u)));
  });
  l = B.chain(l, inner);
  then(B, l, A::Ax10Bwd);
  return B.build();
}

Proof ident_4(char part) {
  ProofBuilder B;
  const Formula s = F("a <=> b");
  // s = ((a -> b) /\ (~b -> ~a)) /\ ((b -> a) /\ (~a -> ~b))
  Line r = 0;
  switch (part) {
    case 'a':
    case 'b': {
      const Formula from = part == 'a' ? a : b;
      r = B.assume(imp(s, from), [&](ProofBuilder& P, Line) {
        return P.assume(s, [&](ProofBuilder& Q, Line h) {
          Line x = Q.mp(h, Q.known(imp(s, from)));
          Line xy = part == 'a' ? Q.and_left(Q.and_left(h)) : Q.and_left(Q.and_right(h));
          return Q.mp(x, xy);
        });
      });
      break;
    }
    default: {
      const Formula from = part == 'c' ? a : b;
      Line l = ax_on(B, A::Ax10Fwd, neg(imp(s, from)));
      Line inner = B.assume(conj(s, neg(from)), [&](ProofBuilder& P, Line h) {
        Line sl = P.and_left(h);
        Line contra = part == 'c' ? P.and_right(P.and_right(sl)) : P.and_right(P.and_left(sl));
        return P.and_intro(sl, P.mp(P.and_right(h), contra));
      });
      l = B.chain(l, dn_mono(B, inner));
      r = then(B, l, A::Ax10Bwd);
      break;
    }
  }
  return B.build(r);
}

Proof ident_5a() {
  ProofBuilder B;
  Line r = B.assume(F("a \\/ b -> c"), [&](ProofBuilder& P, Line h) {
    Line x = P.chain(P.axiom(A::Ax6, {{"a", a}, {"b", b}}), h);
    Line y = P.chain(P.axiom(A::Ax7, {{"a", a}, {"b", b}}), h);
    return P.and_intro(x, y);
  });
  return B.build(r);
}

Proof ident_5b() {
  ProofBuilder B;
  Line r = B.assume(F("(a -> c) /\\ (b -> c)"), [&](ProofBuilder& P, Line h) {
    Line ax = P.axiom(A::Ax8, {{"a", a}, {"b", b}, {"c", c}});
    return P.mp(P.and_right(h), P.mp(P.and_left(h), ax));
  });
  return B.build(r);
}

Proof ident_5c() {
  ProofBuilder B;
  const Formula ac = imp(a, c), bc = imp(b, c);
  Line l = ax_on(B, A::Ax10Fwd, F("~(a \\/ b -> c)"));
  Line inner = B.assume(F("(a \\/ b) /\\ ~c"), [&](ProofBuilder& P, Line h) {
    Line ab = P.and_left(h);
    P.and_right(h);
    Line la = P.assume(a, [&](ProofBuilder& Q, Line x) {
      Line y = fwd(Q, A::Ax15, Q.and_intro(x, Q.known(neg(c))));
      y = fwd(Q, A::Ax10Bwd, y);
      return Q.mp(y, Q.axiom(A::Ax18, {{"a", ac}, {"b", bc}}));
    });
    Line lb = P.assume(b, [&](ProofBuilder& Q, Line x) {
      Line y = fwd(Q, A::Ax15, Q.and_intro(x, Q.known(neg(c))));
      y = fwd(Q, A::Ax10Bwd, y);
      return Q.mp(y, neg_into_right(Q, bc, ac));
    });
    return P.or_elim(ab, la, lb);
  });
  B.chain(l, dn_collapse(B, inner));
  return B.build();
}

// ~(x -> c) -> ~(a \/ b -> c) for x the left or right disjunct.
Line ident_5d_part(ProofBuilder& B, bool left) {
  const Formula x = left ? a : b;
  Line l = ax_on(B, A::Ax10Fwd, neg(imp(x, c)));
  Line into = B.axiom(left ? A::Ax6 : A::Ax7, {{"a", a}, {"b", b}});
  l = B.chain(l, dn_mono(B, and_mono(B, into, B.identity(neg(c)))));
  return then(B, l, A::Ax10Bwd);
}

Proof ident_5d() {
  ProofBuilder B;
  Line x = ident_5d_part(B, true);
  Line y = ident_5d_part(B, false);
  lub(B, x, y);
  return B.build();
}

Proof ident_6a() {
  ProofBuilder B;
  Line r = B.assume(F("a -> b /\\ c"), [&](ProofBuilder& P, Line h) {
    Line x = P.chain(h, P.axiom(A::Ax3, {{"a", b}, {"b", c}}));
    Line y = P.chain(h, P.axiom(A::Ax4, {{"a", b}, {"b", c}}));
    return P.and_intro(x, y);
  });
  return B.build(r);
}

Proof ident_6b() {
  ProofBuilder B;
  Line r = B.assume(F("(a -> b) /\\ (a -> c)"), [&](ProofBuilder& P, Line h) {
    return imp_and(P, P.and_left(h), P.and_right(h));
  });
  return B.build(r);
}

Proof ident_6c() {
  ProofBuilder B;
  const Formula ab = imp(a, b), ac = imp(a, c);
  Line l = ax_on(B, A::Ax10Fwd, F("~(a -> b /\\ c)"));
  Line inner = B.assume(F("a /\\ ~(b /\\ c)"), [&](ProofBuilder& P, Line h) {
    P.and_left(h);
    Line nbc = P.and_right(h);
    Line lb = P.assume(neg(b), [&](ProofBuilder& Q, Line y) {
      Line z = fwd(Q, A::Ax15, Q.and_intro(Q.known(a), y));
      z = fwd(Q, A::Ax10Bwd, z);
      return Q.mp(z, Q.axiom(A::Ax18, {{"a", ab}, {"b", ac}}));
    });
    Line lc = P.assume(neg(c), [&](ProofBuilder& Q, Line y) {
      Line z = fwd(Q, A::Ax15, Q.and_intro(Q.known(a), y));
      z = fwd(Q, A::Ax10Bwd, z);
      return Q.mp(z, neg_into_right(Q, ac, ab));
    });
    return P.mp(nbc, lub(P, lb, lc));
  });
  B.chain(l, dn_collapse(B, inner));
  return B.build();
}

// ~(a -> y) -> ~(a -> b /\ c) for y the left or right conjunct.
Line ident_6d_part(ProofBuilder& B, bool left) {
  const Formula y = left ? b : c;
  Line l = ax_on(B, A::Ax10Fwd, neg(imp(a, y)));
  Line into = left ? B.axiom(A::Ax18, {{"a", b}, {"b", c}}) : neg_into_right(B, c, b);
  l = B.chain(l, dn_mono(B, and_mono(B, B.identity(a), into)));
  return then(B, l, A::Ax10Bwd);
}

Proof ident_6d() {
  ProofBuilder B;
  Line x = ident_6d_part(B, true);
  Line y = ident_6d_part(B, false);
  lub(B, x, y);
  return B.build();
}

Proof ident_7() {
  ProofBuilder B;
  Line r = B.assume(F("(a -> b) /\\ (b -> c)"),
                    [&](ProofBuilder& P, Line h) { return P.chain(P.and_left(h), P.and_right(h)); });
  return B.build(r);
}

Proof ident_8() {
  ProofBuilder B;
  Line r = B.assume(F("a -> b"), [&](ProofBuilder& P, Line h) {
    return P.chain(h, P.axiom(A::Ax6, {{"a", b}, {"b", c}}));
  });
  return B.build(r);
}

Proof ident_9b() {
  ProofBuilder B;
  const Formula hyp = F("(a -> b) -> a -> c");
  Line r = B.assume(hyp, [&](ProofBuilder& P, Line) {
    return P.assume(a, [&](ProofBuilder& Q, Line) {
      return Q.assume(b, [&](ProofBuilder& R, Line y) {
        Line ab = R.mp(y, R.axiom(A::Ax1, {{"a", b}, {"b", a}}));
        return R.mp(R.known(a), R.mp(ab, R.known(hyp)));
      });
    });
  });
  return B.build(r);
}

Proof ident_9c() {
  ProofBuilder B;
  Line l = ax_on(B, A::Ax10Fwd, F("~(a -> b -> c)"));
  Line inner = B.assume(F("~~(a /\\ ~(b -> c))"), [&](ProofBuilder& P, Line h) {
    Line t = fwd(P, A::Ax14Fwd, h);
    Line nna = P.and_left(t);
    Line u = fwd(P, A::Ax22, P.and_right(t));
    u = fwd(P, A::Ax10Fwd, u);
    u = fwd(P, A::Ax14Fwd, u);
    Line nnab = P.mp(P.and_left(u), dn_mono(P, P.axiom(A::Ax1, {{"a", b}, {"b", a}})));
    Line v = fwd(P, A::Ax14Bwd, P.and_intro(nna, P.and_right(u)));
    v = fwd(P, A::Ax10Bwd, v);
    v = fwd(P, A::Ax15, v);
    return fwd(P, A::Ax14Bwd, P.and_intro(nnab, v));
  });
  l = B.chain(l, inner);
  then(B, l, A::Ax10Bwd);
  return B.build();
}

Proof ident_9d() {
  ProofBuilder B;
  Line l = ax_on(B, A::Ax10Fwd, F("~((a -> b) -> a -> c)"));
  Line inner = B.assume(F("~~((a -> b) /\\ ~(a -> c))"), [&](ProofBuilder& P, Line h) {
    Line t = fwd(P, A::Ax14Fwd, h);
    Line nnab = P.and_left(t);
    Line u = fwd(P, A::Ax22, P.and_right(t));
    u = fwd(P, A::Ax10Fwd, u);
    u = fwd(P, A::Ax14Fwd, u);
    Line nna = P.and_left(u);
    Line modus = P.assume(F("(a -> b) /\\ a"), [&](ProofBuilder& Q, Line k) {
      return Q.mp(Q.and_right(k), Q.and_left(k));
    });
    Line nnb = P.mp(fwd(P, A::Ax14Bwd, P.and_intro(nnab, nna)), dn_mono(P, modus));
    Line v = fwd(P, A::Ax14Bwd, P.and_intro(nnb, P.and_right(u)));
    v = fwd(P, A::Ax10Bwd, v);
    v = fwd(P, A::Ax15, v);
    return fwd(P, A::Ax14Bwd, P.and_intro(nna, v));
  });
  l = B.chain(l, inner);
  then(B, l, A::Ax10Bwd);
  return B.build();
}

// ---------------------------------------------------------------------------

std::vector<CatalogEntry> build_catalog() {
  using O = Origin;
  const Substitution ab{{"a", a}, {"b", b}};
  const Substitution abc{{"a", a}, {"b", b}, {"c", c}};
  std::vector<CatalogEntry> out;
  auto add = [&](std::string name, Proof p, Origin o) { out.push_back({std::move(name), std::move(p), o}); };

  add("ref_imp", ref_imp(), O::Described);
  add("ref_neg", ref_neg(), O::Described);
  add("mp", mp_rule(), O::Described);
  add("alg_i", alg_i(), O::Described);
  add("alg_ii", alg_ii(), O::Described);
  add("alg_iii", alg_iii(), O::Described);
  add("alg_iv", alg_iv(), O::Printed);
  add("alg_converse", alg_converse(), O::Described);
  for (int k = 1; k <= 4; ++k) add("cong_neg_" + std::to_string(k), cong_neg(k), O::Described);
  add("cong_and_5", cong_and_5(), O::Printed);
  add("cong_and_6", swapped(cong_and_5()), O::Described);
  add("cong_and_7", cong_and_7(), O::Described);
  add("cong_and_8", swapped(cong_and_7()), O::Described);
  add("cong_or_9", cong_or_9(), O::Described);
  add("cong_or_10", swapped(cong_or_9()), O::Described);
  add("cong_or_neg_11", cong_or_neg_11(), O::Printed);
  add("cong_or_neg_12", swapped(cong_or_neg_11()), O::Described);
  add("cong_imp_13", cong_imp_13(), O::Described);
  add("cong_imp_14", swapped(cong_imp_13()), O::Described);
  add("cong_imp_neg_15", cong_imp_neg_15(), O::Printed);
  add("cong_imp_neg_16", swapped(cong_imp_neg_15()), O::Described);

  add("idem_and_a", single(A::Ax3, {{"a", a}, {"b", a}}), O::Described);
  add("idem_and_b", idem_and_b(), O::Described);
  add("idem_and_c", idem_and_c(), O::Described);
  add("idem_and_d", single(A::Ax18, {{"a", a}, {"b", a}}), O::Described);
  add("idem_or_a", idem_or_a(), O::Constructed);
  add("idem_or_b", single(A::Ax6, {{"a", a}, {"b", a}}), O::Constructed);
  add("idem_or_c", idem_or_c(), O::Constructed);
  add("idem_or_d", idem_or_d(), O::Constructed);
  add("comm_and_a", comm_and_a(), O::Printed);
  add("comm_and_b", swap_ab(comm_and_a()), O::Described);
  add("comm_and_c", single(A::Ax19, ab), O::Described);
  add("comm_and_d", single(A::Ax19, {{"a", b}, {"b", a}}), O::Described);
  add("comm_or_a", comm_or_a(), O::Constructed);
  add("comm_or_b", swap_ab(comm_or_a()), O::Constructed);
  add("comm_or_c", comm_or_c(), O::Constructed);
  add("comm_or_d", swap_ab(comm_or_c()), O::Constructed);
  add("absorp_and_a", single(A::Ax3, {{"a", a}, {"b", disj(a, b)}}), O::Described);
  add("absorp_and_b", absorp_and_b(), O::Printed);
  add("absorp_and_c", absorp_and_c(), O::Printed);
  add("absorp_and_d", single(A::Ax18, {{"a", a}, {"b", disj(a, b)}}), O::Described);
  add("absorp_or_a", absorp_or_a(), O::Constructed);
  add("absorp_or_b", single(A::Ax6, {{"a", a}, {"b", conj(a, b)}}), O::Constructed);
  add("absorp_or_c", absorp_or_c(), O::Constructed);
  add("absorp_or_d", absorp_or_d(), O::Constructed);
  add("assoc_and_a", assoc_and_a(), O::Printed);
  add("assoc_and_b", assoc_and_b(), O::Printed);
  add("assoc_and_c", single(A::Ax11Fwd, abc), O::Described);
  add("assoc_and_d", single(A::Ax11Bwd, abc), O::Described);
  add("assoc_or_a", assoc_or_a(), O::Constructed);
  add("assoc_or_b", assoc_or_b(), O::Constructed);
  add("assoc_or_c", assoc_or_c(), O::Constructed);
  add("assoc_or_d", assoc_or_d(), O::Constructed);
  add("dist_and_a", dist_and_a(), O::Constructed);
  add("dist_and_b", dist_and_b(), O::Constructed);
  add("dist_and_c", single(A::Ax12Fwd, abc), O::Constructed);
  add("dist_and_d", single(A::Ax12Bwd, abc), O::Constructed);
  add("dist_or_a", dist_or_a(), O::Constructed);
  add("dist_or_b", dist_or_b(), O::Constructed);
  add("dist_or_c", single(A::Ax13Fwd, abc), O::Constructed);
  add("dist_or_d", single(A::Ax13Bwd, abc), O::Constructed);

  add("ident_1a", ident_1a(), O::Constructed);
  add("ident_1b", single(A::Ax1, {{"a", b}, {"b", imp(a, a)}}), O::Constructed);
  add("ident_1c", ident_1c(), O::Constructed);
  add("ident_1d", ident_1d(), O::Constructed);
  add("ident_2", single(A::Ax3, ab), O::Constructed);
  add("ident_3a", ident_3a(), O::Constructed);
  add("ident_3b", ident_3b(), O::Constructed);
  add("ident_3c", ident_3c(), O::Constructed);
  add("ident_3d", ident_3d(), O::Constructed);
  for (char part : {'a', 'b', 'c', 'd'}) add(std::string("ident_4") + part, ident_4(part), O::Constructed);
  add("ident_5a", ident_5a(), O::Constructed);
  add("ident_5b", ident_5b(), O::Constructed);
  add("ident_5c", ident_5c(), O::Constructed);
  add("ident_5d", ident_5d(), O::Constructed);
  add("ident_6a", ident_6a(), O::Constructed);
  add("ident_6b", ident_6b(), O::Constructed);
  add("ident_6c", ident_6c(), O::Constructed);
  add("ident_6d", ident_6d(), O::Constructed);
  add("ident_7", ident_7(), O::Constructed);
  add("ident_8", ident_8(), O::Constructed);
  add("ident_9a", single(A::Ax2, abc), O::Constructed);
  add("ident_9b", ident_9b(), O::Constructed);
  add("ident_9c", ident_9c(), O::Constructed);
  add("ident_9d", ident_9d(), O::Constructed);
  add("ident_10", single(A::Ax17, ab), O::Constructed);
  return out;
}

}  // namespace

std::string origin_name(Origin o) {
  switch (o) {
    case Origin::Printed: return "printed";
    case Origin::Described: return "described";
    default: return "constructed";
  }
}

const std::vector<CatalogEntry>& builtin_derivations() {
  static const std::vector<CatalogEntry> catalog = build_catalog();
  return catalog;
}

const CatalogEntry* find_derivation(std::string_view name) {
  for (const auto& e : builtin_derivations())
    if (e.name == name) return &e;
  return nullptr;
}

std::string sequent(const Proof& p) {
  std::string out;
  for (std::size_t k = 0; k < p.premises.size(); ++k) {
    if (k) out += ", ";
    out += render(p.premises[k]);
  }
  out += out.empty() ? "|- " : " |- ";
  return out + render(p.conclusion());
}

}  // namespace qn4

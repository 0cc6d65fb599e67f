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

#include "qn4/algebra.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace qn4 {

Table Table::from_rows(const std::vector<std::vector<int>>& rows) {
  Table t(rows.size());
  for (std::size_t a = 0; a < rows.size(); ++a) {
    if (rows[a].size() != rows.size()) throw std::invalid_argument("table is not square");
    for (std::size_t b = 0; b < rows.size(); ++b) {
      if (rows[a][b] < 0 || static_cast<std::size_t>(rows[a][b]) >= rows.size())
        throw std::invalid_argument("table entry out of range");
      t.at(a, b) = static_cast<Element>(rows[a][b]);
    }
  }
  return t;
}

std::vector<std::vector<int>> Table::rows() const {
  std::vector<std::vector<int>> out(n_, std::vector<int>(n_));
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b) out[a][b] = (*this)(a, b);
  return out;
}

namespace {

void check_table(const Table& t, std::size_t n, const char* name) {
  if (t.size() != n) throw std::invalid_argument(std::string(name) + " table has the wrong size");
  for (Element e : t.cells())
    if (e >= n) throw std::invalid_argument(std::string(name) + " table entry out of range");
}

void check_unary(const std::vector<Element>& u, std::size_t n, const char* name) {
  if (u.size() != n) throw std::invalid_argument(std::string(name) + " has the wrong size");
  for (Element e : u)
    if (e >= n) throw std::invalid_argument(std::string(name) + " entry out of range");
}

}  // namespace

void FiniteAlgebra::validate() const {
  if (size == 0) throw std::invalid_argument("empty carrier");
  if (size > 0xffff) throw std::invalid_argument("carrier too large");
  check_table(meet, size, "meet");
  check_table(join, size, "join");
  check_table(imp, size, "imp");
  check_unary(neg, size, "neg");
}

void NuclearBrouwerian::validate() const {
  if (size == 0) throw std::invalid_argument("empty carrier");
  if (size > 0xffff) throw std::invalid_argument("carrier too large");
  check_table(meet, size, "meet");
  check_table(join, size, "join");
  check_table(imp, size, "imp");
  check_unary(box, size, "box");
}

Element NuclearBrouwerian::top() const { return imp(0, 0); }

bool CompositeReport::passed() const {
  return std::all_of(items.begin(), items.end(), [](const CheckReport& r) { return r.passed || r.informational; });
}

std::vector<std::string> CompositeReport::violated() const {
  std::vector<std::string> out;
  for (const auto& r : items)
    if (!r.passed && !r.informational) out.push_back(r.law);
  return out;
}

const CheckReport* CompositeReport::find(const std::string& law) const {
  for (const auto& r : items)
    if (r.law == law) return &r;
  return nullptr;
}

// ---------------------------------------------------------------------------
// Evaluation

Element eval(const FiniteAlgebra& a, const Formula& f, const Assignment& v) {
  switch (f.kind()) {
    case Kind::Var: {
      auto it = v.find(f.name());
      if (it == v.end()) throw UnboundVariable(f.name());
      if (it->second >= a.size) throw std::invalid_argument("assigned value out of range");
      return it->second;
    }
    case Kind::Neg:
      return a.neg[eval(a, f.operand(), v)];
    case Kind::And:
      return a.meet(eval(a, f.lhs(), v), eval(a, f.rhs(), v));
    case Kind::Or:
      return a.join(eval(a, f.lhs(), v), eval(a, f.rhs(), v));
    case Kind::Imp:
      return a.imp(eval(a, f.lhs(), v), eval(a, f.rhs(), v));
    default:
      return eval(a, expand_derived(f), v);
  }
}

CompiledFormula::CompiledFormula(const Formula& f, const std::vector<std::string>& variables) {
  const Formula core = f.is_core() ? f : expand_derived(f);
  std::function<std::uint32_t(const Formula&)> emit = [&](const Formula& g) -> std::uint32_t {
    Instr in{g.kind(), 0, 0};
    switch (g.kind()) {
      case Kind::Var: {
        auto it = std::find(variables.begin(), variables.end(), g.name());
        if (it == variables.end()) throw UnboundVariable(g.name());
        in.a = static_cast<std::uint32_t>(it - variables.begin());
        break;
      }
      case Kind::Neg:
        in.a = emit(g.operand());
        break;
      default:
        in.a = emit(g.lhs());
        in.b = emit(g.rhs());
    }
    code_.push_back(in);
    return static_cast<std::uint32_t>(code_.size() - 1);
  };
  emit(core);
}

Element CompiledFormula::operator()(const FiniteAlgebra& a, std::span<const Element> values,
                                    std::vector<Element>& r) const {
  r.resize(code_.size());
  for (std::size_t k = 0; k < code_.size(); ++k) {
    const Instr& in = code_[k];
    switch (in.op) {
      case Kind::Var: r[k] = values[in.a]; break;
      case Kind::Neg: r[k] = a.neg[r[in.a]]; break;
      case Kind::And: r[k] = a.meet(r[in.a], r[in.b]); break;
      case Kind::Or: r[k] = a.join(r[in.a], r[in.b]); break;
      default: r[k] = a.imp(r[in.a], r[in.b]); break;
    }
  }
  return r.back();
}

namespace {

std::vector<std::string> sorted_variables(const std::vector<Equation>& eqs) {
  std::set<std::string> names;
  for (const auto& e : eqs)
    for (auto& v : variables(e)) names.insert(v);
  return {names.begin(), names.end()};
}

Assignment make_assignment(const std::vector<std::string>& names, const std::vector<Element>& values) {
  Assignment out;
  for (std::size_t k = 0; k < names.size(); ++k) out[names[k]] = values[k];
  return out;
}

// Visits every assignment in lexicographic order until `visit` returns false.
template <typename Visit>
std::uint64_t for_each_assignment(std::size_t n, std::size_t vars, std::vector<Element>& values, Visit visit) {
  values.assign(vars, 0);
  std::uint64_t count = 0;
  while (true) {
    ++count;
    if (!visit()) return count;
    std::size_t k = vars;
    while (k > 0) {
      --k;
      if (++values[k] < n) break;
      values[k] = 0;
      if (k == 0) return count;
    }
    if (vars == 0) return count;
  }
}

}  // namespace

CheckReport check_equation(const FiniteAlgebra& a, const Equation& eq, std::string law) {
  CheckReport rep;
  rep.law = law.empty() ? render(eq) : std::move(law);
  const auto names = sorted_variables({eq});
  const CompiledFormula lhs(eq.lhs, names), rhs(eq.rhs, names);
  std::vector<Element> values, scratch;
  rep.assignments = for_each_assignment(a.size, names.size(), values, [&] {
    Element l = lhs(a, values, scratch);
    Element r = rhs(a, values, scratch);
    if (l == r) return true;
    rep.passed = false;
    rep.witness = Witness{make_assignment(names, values), l, r};
    return false;
  });
  return rep;
}

CheckReport check_quasiequation(const FiniteAlgebra& a, const QuasiEquation& q, std::string law) {
  CheckReport rep;
  if (law.empty()) {
    for (const auto& e : q.antecedents) law += render(e) + " & ";
    law += (q.antecedents.empty() ? "" : "=> ") + render(q.consequent);
  }
  rep.law = std::move(law);
  std::vector<Equation> all = q.antecedents;
  all.push_back(q.consequent);
  const auto names = sorted_variables(all);
  std::vector<std::pair<CompiledFormula, CompiledFormula>> ante;
  for (const auto& e : q.antecedents) ante.emplace_back(CompiledFormula(e.lhs, names), CompiledFormula(e.rhs, names));
  const CompiledFormula lhs(q.consequent.lhs, names), rhs(q.consequent.rhs, names);
  std::vector<Element> values, scratch;
  rep.assignments = for_each_assignment(a.size, names.size(), values, [&] {
    for (const auto& [l, r] : ante)
      if (l(a, values, scratch) != r(a, values, scratch)) return true;
    Element l = lhs(a, values, scratch);
    Element r = rhs(a, values, scratch);
    if (l == r) return true;
    rep.passed = false;
    rep.witness = Witness{make_assignment(names, values), l, r};
    return false;
  });
  return rep;
}

bool refutes(const FiniteAlgebra& a, const Equation& eq, const Witness& w) {
  return eval(a, eq.lhs, w.assignment) != eval(a, eq.rhs, w.assignment);
}

bool refutes(const FiniteAlgebra& a, const QuasiEquation& q, const Witness& w) {
  for (const auto& e : q.antecedents)
    if (refutes(a, e, w)) return false;
  return refutes(a, q.consequent, w);
}

// ---------------------------------------------------------------------------
// Lattice-level checks

namespace {

CheckReport table_law(std::string law, std::size_t n, int arity,
                      const std::function<bool(Element, Element, Element)>& holds) {
  CheckReport rep;
  rep.law = std::move(law);
  static const char* names[] = {"x", "y", "z"};
  const std::size_t ny = arity >= 2 ? n : 1, nz = arity >= 3 ? n : 1;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < ny; ++y)
      for (std::size_t z = 0; z < nz; ++z) {
        ++rep.assignments;
        if (holds(Element(x), Element(y), Element(z))) continue;
        rep.passed = false;
        Witness w;
        const Element vals[] = {Element(x), Element(y), Element(z)};
        for (int k = 0; k < arity; ++k) w.assignment[names[k]] = vals[k];
        rep.witness = std::move(w);
        return rep;
      }
  return rep;
}

}  // namespace

CompositeReport is_lattice(const Table& m, const Table& j) {
  CompositeReport rep{"lattice", {}};
  const std::size_t n = m.size();
  if (j.size() != n) {
    rep.items.push_back({"shape", false, {}, "meet and join tables differ in size"});
    return rep;
  }
  rep.items.push_back(table_law("meet commutative", n, 2, [&](Element x, Element y, Element) { return m(x, y) == m(y, x); }));
  rep.items.push_back(table_law("join commutative", n, 2, [&](Element x, Element y, Element) { return j(x, y) == j(y, x); }));
  rep.items.push_back(table_law("meet associative", n, 3,
                                [&](Element x, Element y, Element z) { return m(x, m(y, z)) == m(m(x, y), z); }));
  rep.items.push_back(table_law("join associative", n, 3,
                                [&](Element x, Element y, Element z) { return j(x, j(y, z)) == j(j(x, y), z); }));
  rep.items.push_back(table_law("meet idempotent", n, 1, [&](Element x, Element, Element) { return m(x, x) == x; }));
  rep.items.push_back(table_law("join idempotent", n, 1, [&](Element x, Element, Element) { return j(x, x) == x; }));
  rep.items.push_back(table_law("meet absorbs join", n, 2, [&](Element x, Element y, Element) { return m(x, j(x, y)) == x; }));
  rep.items.push_back(table_law("join absorbs meet", n, 2, [&](Element x, Element y, Element) { return j(x, m(x, y)) == x; }));
  return rep;
}

CheckReport is_distributive(const Table& m, const Table& j) {
  return table_law("distributive", m.size(), 3,
                   [&](Element x, Element y, Element z) { return m(x, j(y, z)) == j(m(x, y), m(x, z)); });
}

std::optional<Table> residuum_of(const Table& m, const Table& j) {
  const std::size_t n = m.size();
  if (!is_lattice(m, j)) return std::nullopt;
  auto leq = [&](std::size_t a, std::size_t b) { return m(a, b) == a; };
  Table imp(n);
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t c = 0; c < n; ++c) {
      // Join of every a with a /\ b <= c; it must itself qualify.
      std::optional<Element> best;
      for (std::size_t a = 0; a < n; ++a)
        if (leq(m(a, b), c)) best = best ? j(*best, a) : Element(a);
      if (!best || !leq(m(*best, b), c)) return std::nullopt;
      imp.at(b, c) = *best;
    }
  return imp;
}

CompositeReport is_brouwerian(const Table& m, const Table& j, const Table& imp) {
  CompositeReport rep = is_lattice(m, j);
  rep.subject = "Brouwerian";
  const std::size_t n = m.size();
  if (imp.size() != n) {
    rep.items.push_back({"shape", false, {}, "imp table has the wrong size"});
    return rep;
  }
  auto leq = [&](Element a, Element b) { return m(a, b) == a; };
  rep.items.push_back(table_law("residuation", n, 3, [&](Element x, Element y, Element z) {
    return leq(m(x, y), z) == leq(x, imp(y, z));
  }));
  return rep;
}

CompositeReport is_nucleus(const Table& m, const Table& j, const std::vector<Element>& box) {
  CompositeReport rep{"nucleus", {}};
  const std::size_t n = m.size();
  (void)j;
  if (box.size() != n) {
    rep.items.push_back({"shape", false, {}, "box has the wrong size"});
    return rep;
  }
  auto leq = [&](Element a, Element b) { return m(a, b) == a; };
  rep.items.push_back(table_law("inflationary", n, 1, [&](Element x, Element, Element) { return leq(x, box[x]); }));
  rep.items.push_back(table_law("idempotent", n, 1, [&](Element x, Element, Element) { return box[box[x]] == box[x]; }));
  rep.items.push_back(table_law("preserves meets", n, 2,
                                [&](Element x, Element y, Element) { return box[m(x, y)] == m(box[x], box[y]); }));
  return rep;
}

// ---------------------------------------------------------------------------
// The relation a <= b and the quotient

bool preceq(const FiniteAlgebra& a, Element x, Element y) {
  const Element t = a.imp(x, y);
  return t == a.imp(t, t);
}

bool equivalent(const FiniteAlgebra& a, Element x, Element y) { return preceq(a, x, y) && preceq(a, y, x); }

QuotientError::QuotientError(Reason reason, const std::string& message, std::optional<std::pair<Element, Element>> pair)
    : std::runtime_error(message), reason_(reason), pair_(pair) {}

Partition equiv_classes(const FiniteAlgebra& a) {
  const std::size_t n = a.size;
  std::vector<std::vector<bool>> rel(n, std::vector<bool>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) rel[x][y] = equivalent(a, Element(x), Element(y));
  using R = QuotientError::Reason;
  for (std::size_t x = 0; x < n; ++x)
    if (!rel[x][x]) throw QuotientError(R::NotEquivalence, "relation is not reflexive", std::pair{Element(x), Element(x)});
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (!rel[x][y]) continue;
      for (std::size_t z = 0; z < n; ++z)
        if (rel[y][z] && !rel[x][z])
          throw QuotientError(R::NotEquivalence, "relation is not transitive", std::pair{Element(x), Element(z)});
    }
  Partition p;
  p.class_of.assign(n, n);
  for (std::size_t x = 0; x < n; ++x) {
    if (p.class_of[x] != n) continue;
    std::vector<Element> cls;
    for (std::size_t y = x; y < n; ++y)
      if (rel[x][y]) {
        p.class_of[y] = p.classes.size();
        cls.push_back(Element(y));
      }
    p.classes.push_back(std::move(cls));
  }
  return p;
}

Quotient quotient(const FiniteAlgebra& a) {
  using R = QuotientError::Reason;
  Quotient q;
  q.partition = equiv_classes(a);
  const Partition& p = q.partition;
  const std::size_t n = a.size;
  auto same = [&](Element x, Element y) { return p.class_of[x] == p.class_of[y]; };
  // Replacing one argument at a time is enough, by transitivity.
  const std::pair<const Table*, const char*> ops[] = {{&a.meet, "meet"}, {&a.join, "join"}, {&a.imp, "imp"}};
  for (auto [t, name] : ops)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        if (!same(Element(x), Element(y)) || x == y) continue;
        for (std::size_t z = 0; z < n; ++z)
          if (!same((*t)(x, z), (*t)(y, z)) || !same((*t)(z, x), (*t)(z, y)))
            throw QuotientError(R::NotCongruence, std::string("relation is not compatible with ") + name,
                                std::pair{Element(x), Element(y)});
      }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (same(Element(x), Element(y)) && !same(a.neg[a.neg[x]], a.neg[a.neg[y]]))
        throw QuotientError(R::BoxNotWellDefined, "~~ does not respect the relation", std::pair{Element(x), Element(y)});

  const std::size_t k = p.classes.size();
  NuclearBrouwerian& b = q.algebra;
  b.size = k;
  b.meet = Table(k);
  b.join = Table(k);
  b.imp = Table(k);
  b.box.assign(k, 0);
  for (std::size_t c = 0; c < k; ++c) {
    const Element rc = p.classes[c].front();
    b.box[c] = Element(p.class_of[a.neg[a.neg[rc]]]);
    for (std::size_t d = 0; d < k; ++d) {
      const Element rd = p.classes[d].front();
      b.meet.at(c, d) = Element(p.class_of[a.meet(rc, rd)]);
      b.join.at(c, d) = Element(p.class_of[a.join(rc, rd)]);
      b.imp.at(c, d) = Element(p.class_of[a.imp(rc, rd)]);
    }
  }
  auto rep_pair = [&](const Witness& w) {
    auto get = [&](const char* v) {
      auto it = w.assignment.find(v);
      return it == w.assignment.end() ? Element(0) : p.classes[it->second].front();
    };
    return std::pair{get("x"), get("y")};
  };
  const CompositeReport brouwer = is_brouwerian(b.meet, b.join, b.imp);
  for (const auto& item : brouwer.items)
    if (!item.passed)
      throw QuotientError(R::NotBrouwerian, "quotient fails " + item.law,
                          item.witness ? std::optional(rep_pair(*item.witness)) : std::nullopt);
  const CompositeReport nucleus = is_nucleus(b.meet, b.join, b.box);
  for (const auto& item : nucleus.items)
    if (!item.passed)
      throw QuotientError(R::BoxNotNucleus, "box on the quotient is not " + item.law,
                          item.witness ? std::optional(rep_pair(*item.witness)) : std::nullopt);
  return q;
}

// ---------------------------------------------------------------------------
// QN4 checks

CompositeReport is_qn4_relational(const FiniteAlgebra& a) {
  CompositeReport rep{"QN4 (relational)", {}};
  const std::size_t n = a.size;
  const auto& neg = a.neg;

  {
    CheckReport r;
    r.law = "QN4a";
    const CompositeReport lat = is_lattice(a.meet, a.join);
    for (const auto& item : lat.items)
      if (!item.passed) {
        r.passed = false;
        r.witness = item.witness;
        r.detail = item.law;
        break;
      }
    if (r.passed) {
      CheckReport d = is_distributive(a.meet, a.join);
      if (!d.passed) {
        r.passed = false;
        r.witness = d.witness;
        r.detail = d.law;
      }
    }
    rep.items.push_back(std::move(r));
  }

  {
    CheckReport r;
    r.law = "QN4b";
    try {
      quotient(a);
    } catch (const QuotientError& e) {
      r.passed = false;
      r.detail = e.what();
      if (e.pair()) r.witness = Witness{{{"x", e.pair()->first}, {"y", e.pair()->second}}, {}, {}};
    }
    rep.items.push_back(std::move(r));
  }

  rep.items.push_back(table_law("QN4c", n, 2, [&](Element x, Element y, Element) {
    return a.leq(x, y) == (preceq(a, x, y) && preceq(a, neg[y], neg[x]));
  }));
  rep.items.push_back(table_law("QN4d", n, 2, [&](Element x, Element y, Element) {
    return equivalent(a, neg[a.imp(x, y)], neg[neg[a.meet(x, neg[y])]]);
  }));
  rep.items.push_back(table_law("QN4e.1", n, 1, [&](Element x, Element, Element) { return a.leq(x, neg[neg[x]]); }));
  rep.items.push_back(table_law("QN4e.2", n, 1, [&](Element x, Element, Element) { return neg[x] == neg[neg[neg[x]]]; }));
  rep.items.push_back(table_law("QN4e.3", n, 2, [&](Element x, Element y, Element) {
    return neg[a.join(x, y)] == a.meet(neg[x], neg[y]);
  }));
  rep.items.push_back(table_law("QN4e.4", n, 2, [&](Element x, Element y, Element) {
    return a.meet(neg[neg[x]], neg[neg[y]]) == neg[neg[a.meet(x, y)]];
  }));

  CheckReport compat = table_law("~ respects the relation", n, 2, [&](Element x, Element y, Element) {
    return !equivalent(a, x, y) || equivalent(a, neg[x], neg[y]);
  });
  compat.informational = true;
  rep.items.push_back(std::move(compat));
  return rep;
}

Equation preceq_equation(const Formula& a, const Formula& b) {
  const Formula t = imp(a, b);
  return {t, imp(t, t)};
}

std::vector<NamedEquation> lattice_equations() {
  const Formula x = var("x"), y = var("y"), z = var("z");
  return {
      {"meet commutative", {conj(x, y), conj(y, x)}},
      {"join commutative", {disj(x, y), disj(y, x)}},
      {"meet associative", {conj(x, conj(y, z)), conj(conj(x, y), z)}},
      {"join associative", {disj(x, disj(y, z)), disj(disj(x, y), z)}},
      {"meet idempotent", {conj(x, x), x}},
      {"join idempotent", {disj(x, x), x}},
      {"meet absorbs join", {conj(x, disj(x, y)), x}},
      {"join absorbs meet", {disj(x, conj(x, y)), x}},
      {"distributive", {conj(x, disj(y, z)), disj(conj(x, y), conj(x, z))}},
  };
}

std::vector<NamedEquation> qn4_identities() {
  auto eq = [](const char* l, const char* r) { return Equation{parse(l), parse(r)}; };
  auto below = [](const char* l, const char* r) { return preceq_equation(parse(l), parse(r)); };
  return {
      {"implication unit", eq("|x| -> y", "y")},
      {"meet elimination", eq("x /\\ y -> x", "|x /\\ y -> x|")},
      {"currying", eq("x /\\ y -> z", "x -> y -> z")},
      {"strong equivalence substitution", eq("(x <=> y) -> x", "(x <=> y) -> y")},
      {"join antecedent", eq("x \\/ y -> z", "(x -> z) /\\ (y -> z)")},
      {"meet consequent", eq("x -> y /\\ z", "(x -> y) /\\ (x -> z)")},
      {"transitivity", below("(x -> y) /\\ (y -> z)", "x -> z")},
      {"join weakening", below("x -> y", "x -> y \\/ z")},
      {"self-distributivity", eq("x -> y -> z", "(x -> y) -> x -> z")},
      {"double negation monotone", below("x -> y", "~~x -> ~~y")},
  };
}

namespace {

CheckReport merge(std::string law, const std::vector<NamedEquation>& eqs, const FiniteAlgebra& a) {
  CheckReport out;
  out.law = std::move(law);
  for (const auto& ne : eqs) {
    CheckReport r = check_equation(a, ne.equation, ne.name);
    out.assignments += r.assignments;
    if (!r.passed) {
      out.passed = false;
      out.witness = r.witness;
      out.detail = ne.name + ": " + render(ne.equation);
      break;
    }
  }
  return out;
}

}  // namespace

CompositeReport is_qn4_equational(const FiniteAlgebra& a) {
  CompositeReport rep{"QN4 (equational)", {}};
  const Formula x = var("x"), y = var("y");
  rep.items.push_back(merge("QN4a", lattice_equations(), a));
  rep.items.push_back(merge("QN4d",
                            {{"QN4d <=", preceq_equation(parse("~(x -> y)"), parse("~~(x /\\ ~y)"))},
                             {"QN4d >=", preceq_equation(parse("~~(x /\\ ~y)"), parse("~(x -> y)"))}},
                            a));
  rep.items.push_back(merge("QN4e.1", {{"QN4e.1", {conj(x, parse("~~x")), x}}}, a));
  rep.items.push_back(merge("QN4e.2", {{"QN4e.2", {parse("~x"), parse("~~~x")}}}, a));
  rep.items.push_back(merge("QN4e.3", {{"QN4e.3", {parse("~(x \\/ y)"), parse("~x /\\ ~y")}}}, a));
  rep.items.push_back(merge("QN4e.4", {{"QN4e.4", {parse("~~x /\\ ~~y"), parse("~~(x /\\ y)")}}}, a));
  for (const auto& ne : qn4_identities()) rep.items.push_back(merge(ne.name, {ne}, a));
  return rep;
}

CheckReport is_n4(const FiniteAlgebra& a) { return check_equation(a, {parse("~~x"), var("x")}, "N4"); }

CheckReport is_quasi_nelson(const FiniteAlgebra& a) {
  return check_equation(a, preceq_equation(parse("x /\\ ~x"), var("y")), "quasi-Nelson");
}

}  // namespace qn4

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

#include "qn4/random.hpp"

#include "qn4/proof_builder.hpp"

namespace qn4 {

namespace {

std::size_t pick(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

bool chance(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

Formula grow(Rng& rng, const FormulaShape& shape, std::size_t budget) {
  if (budget == 0 || chance(rng, 0.15)) return var(shape.variables[pick(rng, shape.variables.size())]);
  const std::size_t choices = shape.derived ? 8 : 4;
  switch (pick(rng, choices)) {
    case 0: return neg(grow(rng, shape, budget - 1));
    case 1: return conj(grow(rng, shape, budget - 1), grow(rng, shape, budget - 1));
    case 2: return disj(grow(rng, shape, budget - 1), grow(rng, shape, budget - 1));
    case 3: return imp(grow(rng, shape, budget - 1), grow(rng, shape, budget - 1));
    case 4: return iff(grow(rng, shape, budget - 1), grow(rng, shape, budget - 1));
    case 5: return strong_imp(grow(rng, shape, budget - 1), grow(rng, shape, budget - 1));
    case 6: return strong_iff(grow(rng, shape, budget - 1), grow(rng, shape, budget - 1));
    default: return abs_of(grow(rng, shape, budget - 1));
  }
}

const std::vector<AxiomId>& all_ids() {
  static const std::vector<AxiomId> ids = [] {
    std::vector<AxiomId> v;
    for (int n = 1; n <= kAxiomCount; ++n) v.push_back(axiom(n));
    for (int n = 9; n <= 14; ++n) {
      v.push_back(directional(n, true));
      v.push_back(directional(n, false));
    }
    return v;
  }();
  return ids;
}

}  // namespace

Formula random_formula(Rng& rng, const FormulaShape& shape) {
  if (shape.variables.empty()) throw std::invalid_argument("random_formula needs at least one variable");
  return grow(rng, shape, shape.max_depth);
}

RandomProof random_proof(Rng& rng, std::size_t max_depth) {
  const FormulaShape small{2, {"p", "q", "r"}, false};
  ProofBuilder B;
  std::vector<std::size_t> depth;
  auto note = [&](ProofBuilder::Line l, std::size_t d) {
    if (l >= depth.size()) depth.resize(l + 1, d);
    return l;
  };
  auto fill = [&](Substitution s, const Formula& scheme) {
    for (const auto& v : variables(scheme))
      if (!s.count(v)) s.emplace(v, random_formula(rng, small));
    return s;
  };

  const std::size_t n_premises = 1 + pick(rng, 3);
  std::vector<Formula> premises;
  for (std::size_t k = 0; k < n_premises; ++k) {
    const Formula f = random_formula(rng, small);
    premises.push_back(f);
    note(B.premise(f), 0);
  }

  const std::size_t actions = 4 + pick(rng, 11);
  for (std::size_t k = 0; k < actions; ++k) {
    const std::size_t lines = B.size();
    const int action = static_cast<int>(pick(rng, 100));
    if (action < 40) {
      // An axiom whose antecedent is an existing line, then MP.
      const auto x = pick(rng, lines);
      if (depth[x] >= max_depth) continue;
      std::vector<std::pair<AxiomId, Substitution>> options;
      for (AxiomId id : all_ids()) {
        const Formula& s = scheme_of(id);
        if (s.kind() != Kind::Imp) continue;
        if (auto m = match_scheme(s.lhs(), B.formula(x))) options.push_back({id, *m});
      }
      if (options.empty()) continue;
      auto& [id, sub] = options[pick(rng, options.size())];
      const auto ax = note(B.axiom(id, fill(sub, scheme_of(id))), 0);
      note(chance(rng, 0.5) ? B.mp(x, ax) : B.mp(ax, x), depth[x] + 1);
    } else if (action < 55) {
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (std::size_t i = 0; i < lines; ++i)
        for (std::size_t j = 0; j < lines; ++j) {
          const Formula& g = B.formula(j);
          if (g.kind() == Kind::Imp && g.lhs() == B.formula(i) && std::max(depth[i], depth[j]) < max_depth)
            pairs.push_back({i, j});
        }
      if (pairs.empty()) continue;
      auto [i, j] = pairs[pick(rng, pairs.size())];
      note(chance(rng, 0.5) ? B.mp(i, j) : B.mp(j, i), std::max(depth[i], depth[j]) + 1);
    } else if (action < 70) {
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (std::size_t i = 0; i < lines; ++i)
        for (std::size_t j = 0; j < lines; ++j) {
          const Formula &f = B.formula(i), &g = B.formula(j);
          if (f.kind() == Kind::Imp && g.kind() == Kind::Imp && f.rhs() == g.lhs() &&
              std::max(depth[i], depth[j]) < max_depth)
            pairs.push_back({i, j});
        }
      if (pairs.empty()) continue;
      auto [i, j] = pairs[pick(rng, pairs.size())];
      note(B.chain(i, j), std::max(depth[i], depth[j]) + 1);
    } else if (action < 80) {
      const Formula f = chance(rng, 0.5) ? B.formula(pick(rng, lines)) : random_formula(rng, small);
      note(B.identity(f), 0);
    } else {
      const auto& ids = all_ids();
      const AxiomId id = ids[pick(rng, ids.size())];
      note(B.axiom(id, fill({}, scheme_of(id))), 0);
    }
  }
  return {B.build(), premises[pick(rng, premises.size())]};
}

FiniteAlgebra mutate(const FiniteAlgebra& a, Rng& rng, std::size_t max_changes) {
  FiniteAlgebra m = a;
  const std::size_t n = a.size;
  if (n < 2 || max_changes == 0) return m;
  const std::size_t changes = 1 + pick(rng, max_changes);
  for (std::size_t k = 0; k < changes; ++k) {
    const Element shift = static_cast<Element>(1 + pick(rng, n - 1));
    const std::size_t op = pick(rng, 4);
    if (op == 3) {
      Element& e = m.neg[pick(rng, n)];
      e = static_cast<Element>((e + shift) % n);
      continue;
    }
    Table& t = op == 0 ? m.meet : op == 1 ? m.join : m.imp;
    Element& e = t.at(pick(rng, n), pick(rng, n));
    e = static_cast<Element>((e + shift) % n);
  }
  return m;
}

}  // namespace qn4

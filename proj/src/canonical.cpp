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

#include "qn4/canonical.hpp"

#include <algorithm>
#include <map>

namespace qn4 {

namespace {

using Coloring = std::vector<std::size_t>;

std::size_t count_cells(const Coloring& c) {
  std::vector<std::size_t> s = c;
  std::sort(s.begin(), s.end());
  return static_cast<std::size_t>(std::unique(s.begin(), s.end()) - s.begin());
}

// Replaces colors by the rank of their signatures.
template <typename Sig>
Coloring rank(const std::vector<Sig>& sigs) {
  std::vector<Sig> sorted = sigs;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  Coloring out(sigs.size());
  for (std::size_t x = 0; x < sigs.size(); ++x)
    out[x] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), sigs[x]) - sorted.begin());
  return out;
}

// Equitable refinement: the signature of x records its color and, for
// every y, the colors of y and of x*y, y*x under each operation.
Coloring refine(const Structure& s, Coloring c) {
  const std::size_t n = s.size;
  std::size_t cells = count_cells(c);
  while (true) {
    std::vector<std::vector<std::size_t>> sigs(n);
    for (std::size_t x = 0; x < n; ++x) {
      auto& sig = sigs[x];
      sig.push_back(c[x]);
      for (const auto* u : s.unary) sig.push_back(c[(*u)[x]]);
      std::vector<std::vector<std::size_t>> rows;
      for (std::size_t y = 0; y < n; ++y) {
        std::vector<std::size_t> row{c[y]};
        for (const auto* u : s.unary) row.push_back((*u)[x] == y);
        for (const auto* t : s.binary) {
          row.push_back(c[(*t)(x, y)]);
          row.push_back(c[(*t)(y, x)]);
        }
        rows.push_back(std::move(row));
      }
      std::sort(rows.begin(), rows.end());
      for (auto& r : rows) sig.insert(sig.end(), r.begin(), r.end());
    }
    Coloring next = rank(sigs);
    const std::size_t next_cells = count_cells(next);
    if (next_cells == cells) return next;
    c = std::move(next);
    cells = next_cells;
  }
}

CanonicalKey serialize(const Structure& s, const Coloring& perm) {
  const std::size_t n = s.size;
  std::vector<std::size_t> inv(n);
  for (std::size_t x = 0; x < n; ++x) inv[perm[x]] = x;
  CanonicalKey key;
  key.reserve(2 + n * n * s.binary.size() + n * s.unary.size());
  key.push_back(static_cast<char>(n & 0xff));
  key.push_back(static_cast<char>(n >> 8));
  for (const auto* t : s.binary)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) key.push_back(static_cast<char>(perm[(*t)(inv[i], inv[j])]));
  for (const auto* u : s.unary)
    for (std::size_t i = 0; i < n; ++i) key.push_back(static_cast<char>(perm[(*u)[inv[i]]]));
  return key;
}

void search(const Structure& s, const Coloring& c, Canonical& best, bool& have) {
  const std::size_t n = s.size;
  // First non-singleton cell by color.
  std::vector<std::size_t> size_of(n, 0);
  for (std::size_t x = 0; x < n; ++x) ++size_of[c[x]];
  std::size_t target = n;
  for (std::size_t k = 0; k < n; ++k)
    if (size_of[k] > 1) {
      target = k;
      break;
    }
  if (target == n) {
    CanonicalKey key = serialize(s, c);
    if (!have || key < best.key) {
      best.key = std::move(key);
      best.labeling.assign(c.begin(), c.end());
      have = true;
    }
    return;
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (c[x] != target) continue;
    // Individualize x ahead of the rest of its cell.
    std::vector<std::pair<std::size_t, int>> sig(n);
    for (std::size_t y = 0; y < n; ++y) sig[y] = {c[y], y == x ? 0 : 1};
    search(s, refine(s, rank(sig)), best, have);
  }
}

}  // namespace

Canonical canonicalize(const Structure& s) {
  Canonical best;
  if (s.size == 0) return best;
  if (s.size > 255) throw std::invalid_argument("canonical keys support at most 255 elements");
  bool have = false;
  search(s, refine(s, Coloring(s.size, 0)), best, have);
  return best;
}

CanonicalKey canonical_key(const FiniteAlgebra& a) {
  return canonicalize({a.size, {&a.meet, &a.join, &a.imp}, {&a.neg}}).key;
}

CanonicalKey canonical_key(const NuclearBrouwerian& b) {
  return canonicalize({b.size, {&b.meet, &b.join, &b.imp}, {&b.box}}).key;
}

CanonicalKey canonical_key(const Table& meet, const Table& join) {
  return canonicalize({meet.size(), {&meet, &join}, {}}).key;
}

Table relabel(const Table& t, const std::vector<Element>& perm) {
  Table out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = 0; j < t.size(); ++j) out.at(perm[i], perm[j]) = perm[t(i, j)];
  return out;
}

namespace {

std::vector<Element> relabel_unary(const std::vector<Element>& u, const std::vector<Element>& perm) {
  std::vector<Element> out(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) out[perm[i]] = perm[u[i]];
  return out;
}

}  // namespace

FiniteAlgebra relabel(const FiniteAlgebra& a, const std::vector<Element>& perm) {
  return {a.size, relabel(a.meet, perm), relabel(a.join, perm), relabel(a.imp, perm), relabel_unary(a.neg, perm)};
}

NuclearBrouwerian relabel(const NuclearBrouwerian& b, const std::vector<Element>& perm) {
  return {b.size, relabel(b.meet, perm), relabel(b.join, perm), relabel(b.imp, perm), relabel_unary(b.box, perm)};
}

FiniteAlgebra canonical_form(const FiniteAlgebra& a) {
  return relabel(a, canonicalize({a.size, {&a.meet, &a.join, &a.imp}, {&a.neg}}).labeling);
}

NuclearBrouwerian canonical_form(const NuclearBrouwerian& b) {
  return relabel(b, canonicalize({b.size, {&b.meet, &b.join, &b.imp}, {&b.box}}).labeling);
}

}  // namespace qn4

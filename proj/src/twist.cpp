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

#include "qn4/twist.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>

namespace qn4 {

Pair twist_neg(const NuclearBrouwerian& b, Pair x) { return {x.second, b.box[x.first]}; }

Pair twist_meet(const NuclearBrouwerian& b, Pair x, Pair y) {
  return {b.meet(x.first, y.first), b.box[b.join(x.second, y.second)]};
}

Pair twist_join(const NuclearBrouwerian& b, Pair x, Pair y) {
  return {b.join(x.first, y.first), b.meet(x.second, y.second)};
}

Pair twist_imp(const NuclearBrouwerian& b, Pair x, Pair y) {
  return {b.imp(x.first, y.first), b.meet(b.box[x.first], y.second)};
}

std::optional<std::size_t> TwistStructure::index_of(Pair p) const {
  auto it = std::lower_bound(carrier.begin(), carrier.end(), p);
  if (it == carrier.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - carrier.begin());
}

FiniteAlgebra full_twist(const NuclearBrouwerian& b) {
  std::vector<Pair> all;
  for (Element a1 = 0; a1 < b.size; ++a1)
    for (Element a2 = 0; a2 < b.size; ++a2) all.push_back({a1, a2});
  return make_twist(b, std::move(all)).algebra;
}

std::vector<Pair> fiber(const NuclearBrouwerian& b) {
  std::vector<Pair> out;
  for (Element a1 = 0; a1 < b.size; ++a1)
    for (Element a2 = 0; a2 < b.size; ++a2)
      if (b.box[a2] == a2) out.push_back({a1, a2});
  return out;
}

TwistStructure make_twist(const NuclearBrouwerian& b, std::vector<Pair> carrier) {
  std::sort(carrier.begin(), carrier.end());
  carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());
  TwistStructure t{b, std::move(carrier), {}};
  const std::size_t n = t.carrier.size();
  FiniteAlgebra& a = t.algebra;
  a.size = n;
  a.meet = Table(n);
  a.join = Table(n);
  a.imp = Table(n);
  a.neg.assign(n, 0);
  auto locate = [&](Pair p) {
    auto k = t.index_of(p);
    if (!k) throw TwistError("carrier is not closed under the twist operations");
    return static_cast<Element>(*k);
  };
  for (std::size_t i = 0; i < n; ++i) {
    a.neg[i] = locate(twist_neg(b, t.carrier[i]));
    for (std::size_t j = 0; j < n; ++j) {
      a.meet.at(i, j) = locate(twist_meet(b, t.carrier[i], t.carrier[j]));
      a.join.at(i, j) = locate(twist_join(b, t.carrier[i], t.carrier[j]));
      a.imp.at(i, j) = locate(twist_imp(b, t.carrier[i], t.carrier[j]));
    }
  }
  return t;
}

namespace {

// Operation tables over a candidate list, with kOutside for results that
// leave it.
struct CandidateOps {
  static constexpr std::size_t kOutside = SIZE_MAX;
  std::vector<Pair> pairs;
  std::vector<std::size_t> neg;
  std::vector<std::size_t> bin[3];

  CandidateOps(const NuclearBrouwerian& b, std::vector<Pair> candidates) : pairs(std::move(candidates)) {
    const std::size_t n = pairs.size();
    auto locate = [&](Pair p) {
      auto it = std::lower_bound(pairs.begin(), pairs.end(), p);
      return (it == pairs.end() || *it != p) ? kOutside : static_cast<std::size_t>(it - pairs.begin());
    };
    neg.resize(n);
    for (auto& t : bin) t.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      neg[i] = locate(twist_neg(b, pairs[i]));
      for (std::size_t j = 0; j < n; ++j) {
        bin[0][i * n + j] = locate(twist_meet(b, pairs[i], pairs[j]));
        bin[1][i * n + j] = locate(twist_join(b, pairs[i], pairs[j]));
        bin[2][i * n + j] = locate(twist_imp(b, pairs[i], pairs[j]));
      }
    }
  }

  // Closure of `seed`; nullopt when it escapes the candidates.
  std::optional<std::uint64_t> close(std::uint64_t seed) const {
    const std::size_t n = pairs.size();
    std::uint64_t set = seed;
    std::vector<std::size_t> members;
    for (std::size_t i = 0; i < n; ++i)
      if (set >> i & 1) members.push_back(i);
    // Each newly added element is combined with everything present so far.
    for (std::size_t k = 0; k < members.size(); ++k) {
      const std::size_t x = members[k];
      auto add = [&](std::size_t r) {
        if (r == kOutside) return false;
        if (!(set >> r & 1)) {
          set |= std::uint64_t{1} << r;
          members.push_back(r);
        }
        return true;
      };
      if (!add(neg[x])) return std::nullopt;
      for (std::size_t m = 0; m <= k; ++m) {
        const std::size_t y = members[m];
        for (const auto& t : bin)
          if (!add(t[x * n + y]) || !add(t[y * n + x])) return std::nullopt;
      }
    }
    return set;
  }
};

bool surjective_on_first(const NuclearBrouwerian& b, const std::vector<Pair>& carrier) {
  std::vector<bool> seen(b.size, false);
  for (auto [a1, a2] : carrier) seen[a1] = true;
  return std::all_of(seen.begin(), seen.end(), [](bool s) { return s; });
}

}  // namespace

TwistStructure generated_subalgebra(const NuclearBrouwerian& b, const std::vector<Pair>& generators) {
  for (auto [a1, a2] : generators) {
    if (a1 >= b.size || a2 >= b.size) throw TwistError("generator out of range");
    if (b.box[a2] != a2) throw TwistError("generator outside the fiber");
  }
  std::set<Pair> closed(generators.begin(), generators.end());
  std::vector<Pair> work(closed.begin(), closed.end());
  for (std::size_t k = 0; k < work.size(); ++k) {
    const Pair x = work[k];
    auto add = [&](Pair p) {
      if (closed.insert(p).second) work.push_back(p);
    };
    add(twist_neg(b, x));
    for (std::size_t m = 0; m <= k; ++m) {
      const Pair y = work[m];
      add(twist_meet(b, x, y));
      add(twist_meet(b, y, x));
      add(twist_join(b, x, y));
      add(twist_join(b, y, x));
      add(twist_imp(b, x, y));
      add(twist_imp(b, y, x));
    }
  }
  std::vector<Pair> carrier(closed.begin(), closed.end());
  if (!surjective_on_first(b, carrier)) throw TwistError("first projection is not surjective");
  return make_twist(b, std::move(carrier));
}

std::vector<TwistStructure> twist_subalgebras(const NuclearBrouwerian& b, bool fiber_only,
                                              std::size_t max_candidates) {
  std::vector<Pair> candidates;
  if (fiber_only) {
    candidates = fiber(b);
  } else {
    for (Element a1 = 0; a1 < b.size; ++a1)
      for (Element a2 = 0; a2 < b.size; ++a2) candidates.push_back({a1, a2});
  }
  if (candidates.size() > max_candidates || candidates.size() > 64)
    throw TwistError(std::to_string(candidates.size()) + " candidate pairs exceed the bound of " +
                     std::to_string(std::min<std::size_t>(max_candidates, 64)));
  const CandidateOps ops(b, candidates);

  // Every closed set arises from a smaller closed set by adding one element
  // and closing, starting from the empty set.
  std::set<std::uint64_t> found{0};
  std::vector<std::uint64_t> work{0};
  for (std::size_t k = 0; k < work.size(); ++k) {
    const std::uint64_t s = work[k];
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (s >> i & 1) continue;
      auto c = ops.close(s | std::uint64_t{1} << i);
      if (c && found.insert(*c).second) work.push_back(*c);
    }
  }

  std::vector<std::vector<Pair>> carriers;
  for (std::uint64_t s : found) {
    std::vector<Pair> carrier;
    for (std::size_t i = 0; i < candidates.size(); ++i)
      if (s >> i & 1) carrier.push_back(candidates[i]);
    if (!carrier.empty() && surjective_on_first(b, carrier)) carriers.push_back(std::move(carrier));
  }
  std::sort(carriers.begin(), carriers.end());
  std::vector<TwistStructure> out;
  out.reserve(carriers.size());
  for (auto& c : carriers) out.push_back(make_twist(b, std::move(c)));
  return out;
}

CheckReport fiber_closure(const NuclearBrouwerian& b) {
  CheckReport rep;
  rep.law = "fiber closure";
  const auto f = fiber(b);
  auto in_fiber = [&](Pair p) { return b.box[p.second] == p.second; };
  auto fail = [&](const char* op, Pair x, Pair y) {
    rep.passed = false;
    rep.detail = op;
    rep.witness = Witness{{{"x", Element(x.first * b.size + x.second)}, {"y", Element(y.first * b.size + y.second)}}, {}, {}};
  };
  for (Pair x : f) {
    ++rep.assignments;
    if (!in_fiber(twist_neg(b, x))) {
      fail("~", x, x);
      return rep;
    }
    for (Pair y : f) {
      ++rep.assignments;
      if (!in_fiber(twist_meet(b, x, y))) return fail("/\\", x, y), rep;
      if (!in_fiber(twist_join(b, x, y))) return fail("\\/", x, y), rep;
      if (!in_fiber(twist_imp(b, x, y))) return fail("->", x, y), rep;
    }
  }
  return rep;
}

Representation represent(const FiniteAlgebra& a) {
  Representation r;
  r.quotient = quotient(a);
  const auto& cls = r.quotient.partition.class_of;
  const NuclearBrouwerian& b = r.quotient.algebra;
  auto iota = [&](Element x) { return Pair{Element(cls[x]), Element(cls[a.neg[x]])}; };

  std::vector<Pair> image;
  for (Element x = 0; x < a.size; ++x) image.push_back(iota(x));
  {
    std::vector<Pair> sorted = image;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) throw TwistError("iota is not injective");
  }
  for (auto [a1, a2] : image)
    if (b.box[a2] != a2) throw TwistError("image leaves the fiber");
  if (!surjective_on_first(b, image)) throw TwistError("first projection of the image is not surjective");
  r.twist = make_twist(b, image);  // throws when the image is not closed

  r.iota.resize(a.size);
  for (Element x = 0; x < a.size; ++x) r.iota[x] = *r.twist.index_of(image[x]);
  const FiniteAlgebra& t = r.twist.algebra;
  if (t.size != a.size) throw TwistError("iota is not onto its image");
  for (Element x = 0; x < a.size; ++x) {
    if (r.iota[a.neg[x]] != t.neg[r.iota[x]]) throw TwistError("iota does not preserve ~ at " + std::to_string(x));
    for (Element y = 0; y < a.size; ++y) {
      const auto ix = r.iota[x], iy = r.iota[y];
      if (r.iota[a.meet(x, y)] != t.meet(ix, iy) || r.iota[a.join(x, y)] != t.join(ix, iy) ||
          r.iota[a.imp(x, y)] != t.imp(ix, iy))
        throw TwistError("iota is not a homomorphism at (" + std::to_string(x) + ", " + std::to_string(y) + ")");
    }
  }
  return r;
}

}  // namespace qn4

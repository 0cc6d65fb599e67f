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

#include "qn4/enumerate.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>

#include "qn4/algebra_io.hpp"

namespace qn4 {

namespace {

// Greatest common lower bound (least upper bound when `up`), if any.
std::optional<Element> bound(const std::vector<std::vector<bool>>& le, std::size_t a, std::size_t b, bool up) {
  const std::size_t n = le.size();
  std::optional<Element> best;
  for (std::size_t c = 0; c < n; ++c) {
    const bool common = up ? (le[a][c] && le[b][c]) : (le[c][a] && le[c][b]);
    if (!common) continue;
    if (!best || (up ? le[c][*best] : le[*best][c])) best = Element(c);
  }
  if (!best) return std::nullopt;
  for (std::size_t c = 0; c < n; ++c) {
    const bool common = up ? (le[a][c] && le[b][c]) : (le[c][a] && le[c][b]);
    if (common && !(up ? le[*best][c] : le[c][*best])) return std::nullopt;
  }
  return best;
}

std::optional<Lattice> lattice_of(const std::vector<std::vector<bool>>& le) {
  const std::size_t n = le.size();
  Lattice l{Table(n), Table(n)};
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      auto m = bound(le, a, b, false);
      auto j = bound(le, a, b, true);
      if (!m || !j) return std::nullopt;
      l.meet.at(a, b) = *m;
      l.join.at(a, b) = *j;
    }
  return l;
}

}  // namespace

std::vector<Lattice> enum_distributive_lattices(std::size_t max_size) {
  if (max_size > kMaxLatticeSize)
    throw BoundExceeded("lattice size bound " + std::to_string(max_size) + " exceeds " +
                        std::to_string(kMaxLatticeSize));
  std::vector<Lattice> out;
  for (std::size_t n = 1; n <= max_size; ++n) {
    // Order relations among the middle elements 1..n-2, naturally labeled.
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 1; i + 1 < n; ++i)
      for (std::size_t j = i + 1; j + 1 < n; ++j) pairs.push_back({i, j});
    std::map<CanonicalKey, Lattice> found;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
      std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
      for (std::size_t i = 0; i < n; ++i) {
        le[i][i] = true;
        le[0][i] = true;
        le[i][n - 1] = true;
      }
      for (std::size_t k = 0; k < pairs.size(); ++k)
        if (mask >> k & 1) le[pairs[k].first][pairs[k].second] = true;
      bool transitive = true;
      for (std::size_t a = 0; a < n && transitive; ++a)
        for (std::size_t b = 0; b < n && transitive; ++b)
          if (le[a][b])
            for (std::size_t c = 0; c < n; ++c)
              if (le[b][c] && !le[a][c]) {
                transitive = false;
                break;
              }
      if (!transitive) continue;
      auto l = lattice_of(le);
      if (!l || !is_distributive(l->meet, l->join)) continue;
      found.emplace(canonical_key(l->meet, l->join), std::move(*l));
    }
    for (auto& [key, l] : found) out.push_back(std::move(l));
  }
  return out;
}

NuclearBrouwerian brouwerian(const Lattice& l, std::vector<Element> box) {
  auto imp = residuum_of(l.meet, l.join);
  if (!imp) throw std::invalid_argument("lattice has no residuum");
  const std::size_t n = l.meet.size();
  if (box.empty()) {
    box.resize(n);
    for (std::size_t k = 0; k < n; ++k) box[k] = Element(k);
  }
  NuclearBrouwerian b{n, l.meet, l.join, *imp, std::move(box)};
  b.validate();
  return b;
}

std::vector<std::vector<Element>> enum_nuclei(const NuclearBrouwerian& b) {
  const std::size_t n = b.size;
  std::vector<std::vector<Element>> upsets(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (b.leq(Element(x), Element(y))) upsets[x].push_back(Element(y));
  std::vector<std::vector<Element>> out;
  std::vector<Element> box(n, 0);
  // Inflationary candidates only; the other two laws are filtered.
  auto rec = [&](auto&& self, std::size_t x) -> void {
    if (x == n) {
      if (is_nucleus(b.meet, b.join, box)) out.push_back(box);
      return;
    }
    for (Element y : upsets[x]) {
      box[x] = y;
      self(self, x + 1);
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

ModelZoo build_zoo(std::size_t base_size_bound, std::size_t twist_bound) {
  ModelZoo zoo;
  zoo.base_size_bound = base_size_bound;
  zoo.twist_bound = twist_bound;
  const auto lattices = enum_distributive_lattices(base_size_bound);
  std::set<CanonicalKey> base_keys, model_keys;
  for (std::size_t li = 0; li < lattices.size(); ++li) {
    const NuclearBrouwerian plain = brouwerian(lattices[li]);
    const auto nuclei = enum_nuclei(plain);
    for (std::size_t ni = 0; ni < nuclei.size(); ++ni) {
      NuclearBrouwerian b = brouwerian(lattices[li], nuclei[ni]);
      if (!base_keys.insert(canonical_key(b)).second) continue;
      const std::size_t fiber_size = fiber(b).size();
      if (fiber_size > twist_bound)
        throw BoundExceeded("base " + std::to_string(zoo.bases.size()) + " has " + std::to_string(fiber_size) +
                            " fiber pairs, over the bound " + std::to_string(twist_bound) + "; " +
                            std::to_string(zoo.bases.size()) + " bases and " + std::to_string(zoo.models.size()) +
                            " models were built");
      const std::size_t base_id = zoo.bases.size();
      zoo.bases.push_back({b, li, ni});
      for (auto& t : twist_subalgebras(b, true, twist_bound)) {
        ++zoo.carrier_count;
        CanonicalKey key = canonical_key(t.algebra);
        if (!model_keys.insert(key).second) continue;
        ZooModel m{std::move(t), base_id, false, false, false, std::move(key)};
        m.qn4 = is_qn4_relational(m.algebra()).passed();
        m.n4 = is_n4(m.algebra()).passed;
        m.quasi_nelson = is_quasi_nelson(m.algebra()).passed;
        zoo.models.push_back(std::move(m));
      }
    }
  }
  return zoo;
}

namespace {

std::string numbered(const char* stem, std::size_t k) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%s_%03zu.json", stem, k);
  return buf;
}

}  // namespace

void save_zoo(const ModelZoo& zoo, const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir / "bases");
  fs::create_directories(dir / "models");
  nlohmann::json index{{"format", "qn4-zoo/1"},
                       {"base_size_bound", zoo.base_size_bound},
                       {"twist_bound", zoo.twist_bound},
                       {"carrier_count", zoo.carrier_count},
                       {"bases", nlohmann::json::array()},
                       {"models", nlohmann::json::array()}};
  for (std::size_t k = 0; k < zoo.bases.size(); ++k) {
    const auto& b = zoo.bases[k];
    const std::string file = "bases/" + numbered("base", k);
    write_json(dir / file, to_json(b.algebra));
    index["bases"].push_back(
        {{"id", k}, {"file", file}, {"size", b.algebra.size}, {"lattice", b.lattice}, {"nucleus", b.nucleus}});
  }
  for (std::size_t k = 0; k < zoo.models.size(); ++k) {
    const auto& m = zoo.models[k];
    const std::string file = "models/" + numbered("model", k);
    write_json(dir / file, to_json(m.algebra()));
    nlohmann::json carrier = nlohmann::json::array();
    for (auto [a1, a2] : m.twist.carrier) carrier.push_back({a1, a2});
    index["models"].push_back({{"id", k},
                               {"file", file},
                               {"size", m.algebra().size},
                               {"base", m.base},
                               {"carrier", carrier},
                               {"qn4", m.qn4},
                               {"n4", m.n4},
                               {"quasi_nelson", m.quasi_nelson}});
  }
  write_json(dir / "index.json", index);
}

ModelZoo load_zoo(const std::filesystem::path& dir) {
  const nlohmann::json index = read_json(dir / "index.json");
  try {
    if (index.value("format", "") != "qn4-zoo/1") throw std::invalid_argument("unknown zoo format");
    ModelZoo zoo;
    zoo.base_size_bound = index.at("base_size_bound").get<std::size_t>();
    zoo.twist_bound = index.at("twist_bound").get<std::size_t>();
    zoo.carrier_count = index.at("carrier_count").get<std::size_t>();
    for (const auto& e : index.at("bases")) {
      zoo.bases.push_back({base_from_json(read_json(dir / e.at("file").get<std::string>())),
                           e.at("lattice").get<std::size_t>(), e.at("nucleus").get<std::size_t>()});
    }
    for (const auto& e : index.at("models")) {
      const std::size_t base = e.at("base").get<std::size_t>();
      if (base >= zoo.bases.size()) throw std::invalid_argument("model refers to a missing base");
      std::vector<Pair> carrier;
      for (const auto& p : e.at("carrier")) carrier.push_back({p.at(0).get<Element>(), p.at(1).get<Element>()});
      TwistStructure t = make_twist(zoo.bases[base].algebra, std::move(carrier));
      FiniteAlgebra stored = algebra_from_json(read_json(dir / e.at("file").get<std::string>()));
      const bool matches = stored == t.algebra;
      if (!matches) t.algebra = std::move(stored);
      ZooModel m{std::move(t), base, e.at("qn4").get<bool>(), e.at("n4").get<bool>(),
                 e.at("quasi_nelson").get<bool>(), {}, matches};
      m.key = canonical_key(m.algebra());
      zoo.models.push_back(std::move(m));
    }
    return zoo;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed zoo index: ") + e.what());
  }
}

}  // namespace qn4

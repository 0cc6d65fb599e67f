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

#include "qn4/algebra_io.hpp"

#include <fstream>

namespace qn4 {

using nlohmann::json;

namespace {

json unary_json(const std::vector<Element>& u) {
  json out = json::array();
  for (Element e : u) out.push_back(e);
  return out;
}

Table table_from(const json& j, const char* field, std::size_t n) {
  if (!j.contains(field)) throw std::invalid_argument(std::string("missing field ") + field);
  auto rows = j.at(field).get<std::vector<std::vector<int>>>();
  if (rows.size() != n) throw std::invalid_argument(std::string(field) + " has the wrong number of rows");
  return Table::from_rows(rows);
}

std::vector<Element> unary_from(const json& j, const char* field, std::size_t n) {
  if (!j.contains(field)) throw std::invalid_argument(std::string("missing field ") + field);
  auto v = j.at(field).get<std::vector<int>>();
  if (v.size() != n) throw std::invalid_argument(std::string(field) + " has the wrong length");
  std::vector<Element> out;
  for (int e : v) {
    if (e < 0 || static_cast<std::size_t>(e) >= n) throw std::invalid_argument(std::string(field) + " entry out of range");
    out.push_back(static_cast<Element>(e));
  }
  return out;
}

std::size_t size_from(const json& j) {
  if (!j.is_object() || !j.contains("size")) throw std::invalid_argument("missing field size");
  const auto n = j.at("size").get<long long>();
  if (n <= 0 || n > 0xffff) throw std::invalid_argument("size out of range");
  return static_cast<std::size_t>(n);
}

}  // namespace

json to_json(const FiniteAlgebra& a) {
  return {{"size", a.size}, {"meet", a.meet.rows()}, {"join", a.join.rows()}, {"imp", a.imp.rows()},
          {"neg", unary_json(a.neg)}};
}

json to_json(const NuclearBrouwerian& b) {
  return {{"size", b.size}, {"meet", b.meet.rows()}, {"join", b.join.rows()}, {"imp", b.imp.rows()},
          {"box", unary_json(b.box)}};
}

json to_json(const Witness& w) {
  json out{{"assignment", json::object()}};
  for (const auto& [k, v] : w.assignment) out["assignment"][k] = v;
  if (w.lhs) out["lhs"] = *w.lhs;
  if (w.rhs) out["rhs"] = *w.rhs;
  return out;
}

json to_json(const CheckReport& r) {
  json out{{"law", r.law}, {"passed", r.passed}, {"assignments", r.assignments}};
  if (r.witness) out["witness"] = to_json(*r.witness);
  if (!r.detail.empty()) out["detail"] = r.detail;
  if (r.informational) out["informational"] = true;
  return out;
}

FiniteAlgebra algebra_from_json(const json& j) {
  try {
    const std::size_t n = size_from(j);
    FiniteAlgebra a{n, table_from(j, "meet", n), table_from(j, "join", n), table_from(j, "imp", n),
                    unary_from(j, "neg", n)};
    a.validate();
    return a;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed algebra: ") + e.what());
  }
}

NuclearBrouwerian base_from_json(const json& j) {
  try {
    const std::size_t n = size_from(j);
    NuclearBrouwerian b{n, table_from(j, "meet", n), table_from(j, "join", n), table_from(j, "imp", n),
                        unary_from(j, "box", n)};
    b.validate();
    return b;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed algebra: ") + e.what());
  }
}

AnyAlgebra any_from_json(const json& j) {
  if (j.is_object() && j.contains("box")) return base_from_json(j);
  return algebra_from_json(j);
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
}

void write_json(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(1) << '\n';
}

}  // namespace qn4

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

#include "qn4/proof_io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qn4 {

using nlohmann::json;

namespace {

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::size_t step_ref(const std::string& tok) {
  std::size_t pos = 0;
  long long v = -1;
  try {
    v = std::stoll(tok, &pos);
  } catch (const std::exception&) {
  }
  if (pos != tok.size() || v < 1) throw ProofFormatError("bad step number '" + tok + "'");
  return static_cast<std::size_t>(v - 1);
}

std::size_t step_ref(const json& j) {
  if (!j.is_number_integer() || j.get<long long>() < 1) throw ProofFormatError("bad step number " + j.dump());
  return static_cast<std::size_t>(j.get<long long>() - 1);
}

AxiomId axiom_id(const std::string& name) {
  auto id = axiom_from_name(name);
  if (!id) throw ProofFormatError("unknown axiom '" + name + "'");
  return *id;
}

LemmaId lemma_id(const std::string& name) {
  auto id = lemma_from_name(name);
  if (!id) throw ProofFormatError("unknown lemma '" + name + "'");
  return *id;
}

Formula formula_field(const json& j) {
  if (!j.is_string()) throw ProofFormatError("formula must be a string, got " + j.dump());
  try {
    return parse(j.get<std::string>());
  } catch (const ParseError& e) {
    throw ProofFormatError("cannot parse '" + j.get<std::string>() + "': " + e.what());
  }
}

}  // namespace

Justification parse_rule(std::string_view text) {
  std::string s(text);
  std::replace(s.begin(), s.end(), ',', ' ');
  std::istringstream in(s);
  std::vector<std::string> tok;
  for (std::string t; in >> t;) tok.push_back(t);
  if (tok.empty()) throw ProofFormatError("empty justification");
  const std::string head = lower(tok[0]);
  if (head == "premise") {
    if (tok.size() == 1) return PremiseRule{};
    if (tok.size() == 2) return PremiseRule{step_ref(tok[1])};
    throw ProofFormatError("bad premise justification '" + std::string(text) + "'");
  }
  if (head == "mp") {
    if (tok.size() != 3) throw ProofFormatError("MP needs two step numbers: '" + std::string(text) + "'");
    return MpRule{step_ref(tok[1]), step_ref(tok[2])};
  }
  if (head == "lemma") {
    if (tok.size() < 2) throw ProofFormatError("lemma without a number");
    LemmaRule r{lemma_id(tok[1]), {}};
    for (std::size_t k = 2; k < tok.size(); ++k) r.refs.push_back(step_ref(tok[k]));
    return r;
  }
  std::string name;
  for (const auto& t : tok) name += t;
  return AxiomRule{axiom_id(name), std::nullopt};
}

Proof proof_from_rows(const std::vector<std::string>& premises, const std::vector<TableRow>& rows) {
  Proof p;
  for (const auto& f : premises) p.premises.push_back(parse(f));
  for (const auto& r : rows) p.steps.push_back({parse(r.formula), parse_rule(r.rule)});
  return p;
}

json to_json(const Proof& p) {
  json out{{"premises", json::array()}, {"steps", json::array()}};
  for (const auto& f : p.premises) out["premises"].push_back(render(f));
  for (const auto& step : p.steps) {
    json s{{"formula", render(step.formula)}};
    std::visit(
        [&](const auto& r) {
          using T = std::decay_t<decltype(r)>;
          if constexpr (std::is_same_v<T, PremiseRule>) {
            s["rule"] = "premise";
            if (r.index) s["args"] = *r.index + 1;
          } else if constexpr (std::is_same_v<T, AxiomRule>) {
            s["rule"] = "axiom";
            if (r.substitution) {
              json sub = json::object();
              for (const auto& [k, v] : *r.substitution) sub[k] = render(v);
              s["args"] = {{"id", axiom_name(r.id)}, {"subst", sub}};
            } else {
              s["args"] = axiom_name(r.id);
            }
          } else if constexpr (std::is_same_v<T, MpRule>) {
            s["rule"] = "mp";
            s["args"] = {r.first + 1, r.second + 1};
          } else {
            s["rule"] = "lemma";
            if (r.refs.empty()) {
              s["args"] = lemma_name(r.id);
            } else {
              json refs = json::array();
              for (auto x : r.refs) refs.push_back(x + 1);
              s["args"] = {{"id", lemma_name(r.id)}, {"refs", refs}};
            }
          }
        },
        step.rule);
    out["steps"].push_back(std::move(s));
  }
  return out;
}

Proof proof_from_json(const json& j) {
  if (!j.is_object()) throw ProofFormatError("proof must be a JSON object");
  Proof p;
  if (j.contains("premises")) {
    if (!j.at("premises").is_array()) throw ProofFormatError("premises must be an array");
    for (const auto& f : j.at("premises")) p.premises.push_back(formula_field(f));
  }
  if (!j.contains("steps") || !j.at("steps").is_array()) throw ProofFormatError("missing steps array");
  for (const auto& s : j.at("steps")) {
    if (!s.is_object() || !s.contains("formula") || !s.contains("rule"))
      throw ProofFormatError("each step needs formula and rule");
    const Formula f = formula_field(s.at("formula"));
    if (!s.at("rule").is_string()) throw ProofFormatError("rule must be a string");
    const std::string rule = lower(s.at("rule").get<std::string>());
    const json args = s.value("args", json());
    Justification just;
    if (rule == "premise") {
      PremiseRule r;
      if (!args.is_null()) r.index = step_ref(args);
      just = r;
    } else if (rule == "axiom") {
      if (args.is_string()) {
        just = AxiomRule{axiom_id(args.get<std::string>()), std::nullopt};
      } else if (args.is_object() && args.contains("id") && args.at("id").is_string()) {
        AxiomRule r{axiom_id(args.at("id").get<std::string>()), std::nullopt};
        if (args.contains("subst")) {
          if (!args.at("subst").is_object()) throw ProofFormatError("subst must be an object");
          Substitution sub;
          for (const auto& [k, v] : args.at("subst").items()) sub.emplace(k, formula_field(v));
          r.substitution = std::move(sub);
        }
        just = r;
      } else {
        throw ProofFormatError("axiom args must be an id or {id, subst}");
      }
    } else if (rule == "mp") {
      if (!args.is_array() || args.size() != 2) throw ProofFormatError("mp args must be two step numbers");
      just = MpRule{step_ref(args[0]), step_ref(args[1])};
    } else if (rule == "lemma") {
      if (args.is_string()) {
        just = LemmaRule{lemma_id(args.get<std::string>()), {}};
      } else if (args.is_object() && args.contains("id") && args.at("id").is_string()) {
        LemmaRule r{lemma_id(args.at("id").get<std::string>()), {}};
        if (args.contains("refs")) {
          if (!args.at("refs").is_array()) throw ProofFormatError("refs must be an array");
          for (const auto& x : args.at("refs")) r.refs.push_back(step_ref(x));
        }
        just = r;
      } else {
        throw ProofFormatError("lemma args must be an id or {id, refs}");
      }
    } else {
      throw ProofFormatError("unknown rule '" + rule + "'");
    }
    p.steps.push_back({f, std::move(just)});
  }
  return p;
}

json to_json(const ProofReport& r) {
  json out{{"accepted", r.accepted}, {"kernel_steps", r.kernel_steps}};
  if (r.failing_step) out["failing_step"] = *r.failing_step + 1;
  if (!r.message.empty()) out["message"] = r.message;
  return out;
}

}  // namespace qn4

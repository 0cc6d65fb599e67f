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

#include "qn4/hilbert.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qn4 {

namespace {

constexpr std::string_view kSchemeText[kAxiomCount] = {
    "a -> b -> a",
    "(a -> b -> c) -> (a -> b) -> a -> c",
    "a /\\ b -> a",
    "a /\\ b -> b",
    "(a -> b) -> (a -> c) -> a -> b /\\ c",
    "a -> a \\/ b",
    "b -> a \\/ b",
    "(a -> c) -> (b -> c) -> a \\/ b -> c",
    "~(a \\/ b) <-> ~a /\\ ~b",
    "~(a -> b) <-> ~~(a /\\ ~b)",
    "~(a /\\ (b /\\ c)) <-> ~(a /\\ b /\\ c)",
    "~(a /\\ (b \\/ c)) <-> ~(a /\\ b \\/ a /\\ c)",
    "~(a \\/ b /\\ c) <-> ~((a \\/ b) /\\ (a \\/ c))",
    "~~(a /\\ b) <-> ~~a /\\ ~~b",
    "a -> ~~a",
    "a -> ~a -> ~(a -> a)",
    "(a -> b) -> ~~a -> ~~b",
    "~a -> ~(a /\\ b)",
    "~(a /\\ b) -> ~(b /\\ a)",
    "(~a -> ~b) -> ~(a /\\ b) -> ~b",
    "(~a -> ~b) -> (~c -> ~d) -> ~(a /\\ c) -> ~(b /\\ d)",
    "~~~a -> ~a",
};

constexpr int kFirstBiconditional = 9;
constexpr int kLastBiconditional = 14;

struct SchemeTable {
  std::vector<Formula> primitive;    // index 0..21
  std::vector<Formula> directional;  // 2 * (N - 9) + (fwd ? 0 : 1)

  SchemeTable() {
    for (auto text : kSchemeText) primitive.push_back(parse(text));
    for (int n = kFirstBiconditional; n <= kLastBiconditional; ++n) {
      const Formula& bi = primitive[n - 1];
      directional.push_back(bi.lhs());
      directional.push_back(bi.rhs());
    }
  }
};

const SchemeTable& schemes() {
  static const SchemeTable table;
  return table;
}

}  // namespace

AxiomId axiom(int number) {
  if (number < 1 || number > kAxiomCount) throw std::out_of_range("axiom number out of range");
  return static_cast<AxiomId>(number);
}

bool is_directional(AxiomId id) { return static_cast<int>(id) > kAxiomCount; }

int axiom_number(AxiomId id) {
  int raw = static_cast<int>(id);
  if (raw <= kAxiomCount) return raw;
  return kFirstBiconditional + (raw - static_cast<int>(AxiomId::Ax9Fwd)) / 2;
}

static bool is_forward(AxiomId id) {
  return ((static_cast<int>(id) - static_cast<int>(AxiomId::Ax9Fwd)) % 2) == 0;
}

AxiomId directional(int number, bool forward) {
  if (number < kFirstBiconditional || number > kLastBiconditional)
    throw std::out_of_range("only Ax9..Ax14 are biconditionals");
  int raw = static_cast<int>(AxiomId::Ax9Fwd) + 2 * (number - kFirstBiconditional) + (forward ? 0 : 1);
  return static_cast<AxiomId>(raw);
}

std::string axiom_name(AxiomId id) {
  std::string name = "Ax" + std::to_string(axiom_number(id));
  if (is_directional(id)) name += is_forward(id) ? "_fwd" : "_bwd";
  return name;
}

std::optional<AxiomId> axiom_from_name(std::string_view name) {
  std::string s;
  for (char c : name)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.size() < 3 || std::tolower(static_cast<unsigned char>(s[0])) != 'a' ||
      std::tolower(static_cast<unsigned char>(s[1])) != 'x')
    return std::nullopt;
  std::size_t i = 2;
  int number = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])) && number < 100)
    number = number * 10 + (s[i++] - '0');
  if (i == 2 || number < 1 || number > kAxiomCount) return std::nullopt;
  std::string suffix = s.substr(i);
  if (suffix.empty()) return axiom(number);
  bool fwd;
  if (suffix == "_fwd" || suffix == "fwd" || suffix == "(->)" || suffix == "(→)")
    fwd = true;
  else if (suffix == "_bwd" || suffix == "bwd" || suffix == "(<-)" || suffix == "(←)")
    fwd = false;
  else
    return std::nullopt;
  if (number < kFirstBiconditional || number > kLastBiconditional) return std::nullopt;
  return directional(number, fwd);
}

const Formula& scheme_of(AxiomId id) {
  const auto& t = schemes();
  if (!is_directional(id)) return t.primitive[static_cast<int>(id) - 1];
  return t.directional[static_cast<int>(id) - static_cast<int>(AxiomId::Ax9Fwd)];
}

std::string lemma_name(LemmaId id) { return id == LemmaId::Identity ? "1.1" : "1.2"; }

std::optional<LemmaId> lemma_from_name(std::string_view name) {
  std::string s;
  for (char c : name)
    if (!std::isspace(static_cast<unsigned char>(c))) s += static_cast<char>(std::tolower(c));
  if (s.rfind("lemma", 0) == 0) s = s.substr(5);
  if (s == "1.1" || s == "identity") return LemmaId::Identity;
  if (s == "1.2" || s == "chain") return LemmaId::Chain;
  return std::nullopt;
}

const Formula& Proof::conclusion() const {
  if (steps.empty()) throw ProofError("empty proof has no conclusion");
  return steps.back().formula;
}

ProofError::ProofError(const std::string& message, std::optional<std::size_t> step)
    : std::runtime_error(step ? "step " + std::to_string(*step + 1) + ": " + message : message),
      step_(step) {}

// ---------------------------------------------------------------------------
// Macro expansion

namespace {

// Primitive five-step derivation of f -> f, appended to `out`.
void emit_identity(const Formula& f, std::vector<ProofStep>& out) {
  const Formula ff = imp(f, f);
  const std::size_t base = out.size();
  out.push_back({imp(f, imp(ff, f)), AxiomRule{AxiomId::Ax1, {}}});
  out.push_back({imp(imp(f, imp(ff, f)), imp(imp(f, ff), ff)), AxiomRule{AxiomId::Ax2, {}}});
  out.push_back({imp(imp(f, ff), ff), MpRule{base, base + 1}});
  out.push_back({imp(f, ff), AxiomRule{AxiomId::Ax1, {}}});
  out.push_back({ff, MpRule{base + 3, base + 2}});
}

// From lines ab : a -> b and bc : b -> c, derive a -> c.
void emit_chain(std::size_t ab, std::size_t bc, std::vector<ProofStep>& out) {
  const Formula ab_f = out[ab].formula;
  const Formula bc_f = out[bc].formula;
  const Formula a = ab_f.lhs(), c = bc_f.rhs();
  const std::size_t base = out.size();
  out.push_back({imp(bc_f, imp(a, bc_f)), AxiomRule{AxiomId::Ax1, {}}});
  out.push_back({imp(a, bc_f), MpRule{bc, base}});
  out.push_back({imp(imp(a, bc_f), imp(ab_f, imp(a, c))), AxiomRule{AxiomId::Ax2, {}}});
  out.push_back({imp(ab_f, imp(a, c)), MpRule{base + 1, base + 2}});
  out.push_back({imp(a, c), MpRule{ab, base + 3}});
}

bool is_imp_from_to(const Formula& f, const Formula& from, const Formula& to) {
  return f.kind() == Kind::Imp && f.lhs() == from && f.rhs() == to;
}

// Orders two chain references as (a -> b, b -> c) so that they conclude
// `target`; nullopt if neither order works.
std::optional<std::pair<std::size_t, std::size_t>> chain_order(const std::vector<ProofStep>& steps,
                                                                std::size_t i, std::size_t j,
                                                                const Formula& target) {
  if (target.kind() != Kind::Imp) return std::nullopt;
  auto fits = [&](std::size_t x, std::size_t y) {
    const Formula& fx = steps[x].formula;
    const Formula& fy = steps[y].formula;
    return fx.kind() == Kind::Imp && fy.kind() == Kind::Imp && fx.rhs() == fy.lhs() &&
           fx.lhs() == target.lhs() && fy.rhs() == target.rhs();
  };
  if (fits(i, j)) return std::pair{i, j};
  if (fits(j, i)) return std::pair{j, i};
  return std::nullopt;
}

}  // namespace

bool is_primitive(const Proof& p) {
  for (const auto& s : p.steps) {
    if (std::holds_alternative<LemmaRule>(s.rule)) return false;
    if (auto* a = std::get_if<AxiomRule>(&s.rule); a && is_directional(a->id)) return false;
  }
  return true;
}

namespace {

Proof expand_tracked(const Proof& p, std::vector<std::size_t>* origin) {
  Proof out;
  out.premises = p.premises;
  std::vector<std::size_t> where(p.steps.size());
  auto ref = [&](std::size_t r, std::size_t k) {
    if (r >= k) throw ProofError("reference to line " + std::to_string(r + 1) + " is not earlier", k);
    return where[r];
  };
  for (std::size_t k = 0; k < p.steps.size(); ++k) {
    const ProofStep& step = p.steps[k];
    if (const auto* mp = std::get_if<MpRule>(&step.rule)) {
      out.steps.push_back({step.formula, MpRule{ref(mp->first, k), ref(mp->second, k)}});
    } else if (const auto* ax = std::get_if<AxiomRule>(&step.rule); ax && is_directional(ax->id)) {
      const Formula& scheme = scheme_of(ax->id);
      std::optional<Substitution> s = ax->substitution;
      if (!s) s = match_scheme(scheme, step.formula);
      if (!s) throw ProofError("not an instance of " + axiom_name(ax->id), k);
      std::optional<Formula> whole;
      try {
        whole = substitute(scheme_of(axiom(axiom_number(ax->id))), *s);
      } catch (const UnboundVariable& e) {
        throw ProofError(std::string("substitution for ") + axiom_name(ax->id) + ": " + e.what(), k);
      }
      const Formula& bi = *whole;
      const bool fwd = is_forward(ax->id);
      const Formula& part = fwd ? bi.lhs() : bi.rhs();
      if (part != step.formula) throw ProofError("not an instance of " + axiom_name(ax->id), k);
      const std::size_t base = out.steps.size();
      out.steps.push_back({bi, AxiomRule{axiom(axiom_number(ax->id)), s}});
      out.steps.push_back({imp(bi, part), AxiomRule{fwd ? AxiomId::Ax3 : AxiomId::Ax4, {}}});
      out.steps.push_back({part, MpRule{base, base + 1}});
    } else if (const auto* lem = std::get_if<LemmaRule>(&step.rule)) {
      if (lem->id == LemmaId::Identity) {
        const Formula& f = step.formula;
        if (f.kind() != Kind::Imp || f.lhs() != f.rhs())
          throw ProofError("Lemma 1.1 concludes only formulas of the form a -> a", k);
        emit_identity(f.lhs(), out.steps);
      } else {
        if (lem->refs.size() != 2) throw ProofError("Lemma 1.2 cites exactly two lines", k);
        std::size_t i = ref(lem->refs[0], k), j = ref(lem->refs[1], k);
        auto order = chain_order(out.steps, i, j, step.formula);
        if (!order) throw ProofError("cited lines do not chain to this formula", k);
        emit_chain(order->first, order->second, out.steps);
      }
    } else {
      out.steps.push_back(step);
    }
    where[k] = out.steps.size() - 1;
    if (origin) origin->resize(out.steps.size(), k);
  }
  return out;
}

}  // namespace

Proof expand_macros(const Proof& p) { return expand_tracked(p, nullptr); }

// ---------------------------------------------------------------------------
// Kernel

namespace {

std::optional<std::string> kernel_check(const Proof& p, std::size_t k) {
  const ProofStep& step = p.steps[k];
  if (const auto* pr = std::get_if<PremiseRule>(&step.rule)) {
    if (pr->index) {
      if (*pr->index >= p.premises.size()) return "premise index out of range";
      if (p.premises[*pr->index] != step.formula) return "formula differs from the cited premise";
      return std::nullopt;
    }
    if (std::find(p.premises.begin(), p.premises.end(), step.formula) == p.premises.end())
      return "not among the premises";
    return std::nullopt;
  }
  if (const auto* ax = std::get_if<AxiomRule>(&step.rule)) {
    const Formula& scheme = scheme_of(ax->id);
    if (ax->substitution) {
      try {
        if (substitute(scheme, *ax->substitution) != step.formula)
          return "substitution does not produce this instance of " + axiom_name(ax->id);
      } catch (const UnboundVariable& e) {
        return std::string("substitution is partial: ") + e.what();
      }
      return std::nullopt;
    }
    if (!match_scheme(scheme, step.formula)) return "not an instance of " + axiom_name(ax->id);
    return std::nullopt;
  }
  if (const auto* mp = std::get_if<MpRule>(&step.rule)) {
    if (mp->first >= k || mp->second >= k) return "MP must cite earlier lines";
    const Formula& x = p.steps[mp->first].formula;
    const Formula& y = p.steps[mp->second].formula;
    if (is_imp_from_to(y, x, step.formula) || is_imp_from_to(x, y, step.formula)) return std::nullopt;
    return "MP: neither cited line is an implication from the other to this formula";
  }
  return "macro justification reached the kernel";
}

}  // namespace

ProofReport check_proof(const Proof& p) {
  ProofReport report;
  if (p.steps.empty()) {
    report.message = "proof has no steps";
    return report;
  }
  for (const auto& f : p.premises) {
    if (!f.is_core()) {
      report.message = "premise contains a derived connective: " + render(f);
      return report;
    }
  }
  // Map kernel lines back to the user's lines for error reporting.
  std::vector<std::size_t> origin;
  Proof kernel;
  try {
    kernel.premises = p.premises;
    for (std::size_t k = 0; k < p.steps.size(); ++k) {
      if (!p.steps[k].formula.is_core())
        throw ProofError("formula contains a derived connective", k);
    }
    kernel = expand_tracked(p, &origin);
  } catch (const ProofError& e) {
    report.failing_step = e.step();
    report.message = e.what();
    return report;
  }
  for (std::size_t k = 0; k < kernel.steps.size(); ++k) {
    if (auto err = kernel_check(kernel, k)) {
      report.failing_step = origin[k];
      report.message = "step " + std::to_string(origin[k] + 1) + ": " + *err;
      return report;
    }
  }
  report.accepted = true;
  report.kernel_steps = kernel.steps.size();
  report.message = "accepted";
  return report;
}

// ---------------------------------------------------------------------------
// Transformations

Proof instantiate(const Proof& p, const Substitution& s) {
  // Variables not mentioned by s stay fixed.
  auto apply = [&](const Formula& f) {
    Substitution total = s;
    for (const auto& v : variables(f)) total.emplace(v, var(v));
    return substitute(f, total);
  };
  Proof out;
  for (const auto& f : p.premises) out.premises.push_back(apply(f));
  for (const auto& step : p.steps) {
    Justification j = step.rule;
    if (auto* ax = std::get_if<AxiomRule>(&j); ax && ax->substitution) {
      for (auto& [name, f] : *ax->substitution) f = apply(f);
    }
    out.steps.push_back({apply(step.formula), j});
  }
  return out;
}

Proof deduction(const Proof& p, const Formula& discharged) {
  if (ProofReport r = check_proof(p); !r.accepted) throw ProofError("input proof rejected: " + r.message);
  const Proof q = expand_macros(p);
  Proof out;
  for (const auto& f : p.premises)
    if (f != discharged) out.premises.push_back(f);
  const Formula& a = discharged;
  std::vector<std::size_t> implied(q.steps.size());  // line concluding a -> phi_k
  for (std::size_t k = 0; k < q.steps.size(); ++k) {
    const Formula& phi = q.steps[k].formula;
    const Justification& rule = q.steps[k].rule;
    if (std::holds_alternative<PremiseRule>(rule) && phi == a) {
      emit_identity(a, out.steps);
    } else if (const auto* mp = std::get_if<MpRule>(&rule)) {
      std::size_t minor = mp->first, major = mp->second;
      if (!is_imp_from_to(q.steps[major].formula, q.steps[minor].formula, phi)) std::swap(minor, major);
      const Formula& psi = q.steps[minor].formula;
      const std::size_t base = out.steps.size();
      out.steps.push_back(
          {imp(imp(a, imp(psi, phi)), imp(imp(a, psi), imp(a, phi))), AxiomRule{AxiomId::Ax2, {}}});
      out.steps.push_back({imp(imp(a, psi), imp(a, phi)), MpRule{implied[major], base}});
      out.steps.push_back({imp(a, phi), MpRule{implied[minor], base + 1}});
    } else {
      Justification copy = rule;
      if (auto* pr = std::get_if<PremiseRule>(&copy)) pr->index.reset();
      const std::size_t base = out.steps.size();
      out.steps.push_back({phi, copy});
      out.steps.push_back({imp(phi, imp(a, phi)), AxiomRule{AxiomId::Ax1, {}}});
      out.steps.push_back({imp(a, phi), MpRule{base, base + 1}});
    }
    implied[k] = out.steps.size() - 1;
  }
  return out;
}

Proof lemma_identity(const Formula& f) {
  Proof p;
  emit_identity(f, p.steps);
  return p;
}

Proof lemma_chain(const Proof& first, const Proof& second) {
  if (ProofReport r = check_proof(first); !r.accepted) throw ProofError("first proof rejected: " + r.message);
  if (ProofReport r = check_proof(second); !r.accepted)
    throw ProofError("second proof rejected: " + r.message);
  const Formula& ab = first.conclusion();
  const Formula& bc = second.conclusion();
  if (ab.kind() != Kind::Imp || bc.kind() != Kind::Imp)
    throw ProofError("Lemma 1.2 needs two implications");
  if (ab.rhs() != bc.lhs())
    throw ProofError("middle formulas differ: " + render(ab.rhs()) + " vs " + render(bc.lhs()));
  Proof out;
  out.premises = first.premises;
  for (const auto& f : second.premises)
    if (std::find(out.premises.begin(), out.premises.end(), f) == out.premises.end())
      out.premises.push_back(f);
  auto append = [&out](const Proof& src) {
    const std::size_t offset = out.steps.size();
    for (const auto& step : expand_macros(src).steps) {
      Justification j = step.rule;
      if (auto* pr = std::get_if<PremiseRule>(&j)) pr->index.reset();
      if (auto* mp = std::get_if<MpRule>(&j)) {
        mp->first += offset;
        mp->second += offset;
      }
      out.steps.push_back({step.formula, j});
    }
    return out.steps.size() - 1;
  };
  std::size_t i = append(first);
  std::size_t j = append(second);
  emit_chain(i, j, out.steps);
  return out;
}

std::array<Formula, 4> delta(const Formula& a, const Formula& b) {
  return {imp(a, b), imp(b, a), imp(neg(a), neg(b)), imp(neg(b), neg(a))};
}

Equation e_translate(const Formula& f) { return {f, imp(f, f)}; }

std::string describe(const Justification& j) {
  return std::visit(
      [](const auto& r) -> std::string {
        using T = std::decay_t<decltype(r)>;
        if constexpr (std::is_same_v<T, PremiseRule>) {
          return "Premise";
        } else if constexpr (std::is_same_v<T, AxiomRule>) {
          return axiom_name(r.id);
        } else if constexpr (std::is_same_v<T, MpRule>) {
          return "MP, " + std::to_string(r.first + 1) + ", " + std::to_string(r.second + 1);
        } else {
          std::string s = "Lemma " + lemma_name(r.id);
          for (auto x : r.refs) s += ", " + std::to_string(x + 1);
          return s;
        }
      },
      j);
}

std::string format_proof(const Proof& p) {
  std::ostringstream os;
  if (!p.premises.empty()) {
    os << "premises:";
    for (std::size_t i = 0; i < p.premises.size(); ++i) os << (i ? "; " : " ") << render(p.premises[i]);
    os << '\n';
  }
  for (std::size_t k = 0; k < p.steps.size(); ++k)
    os << k + 1 << ". " << render(p.steps[k].formula) << "    | " << describe(p.steps[k].rule) << '\n';
  return os.str();
}

}  // namespace qn4

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

// Hilbert calculus: 22 axiom schemes and modus ponens.
//
// The trusted kernel only understands three justifications: premise, axiom
// instance (one of the 22 primitive schemes) and modus ponens. Everything else
// that may appear in a proof is a macro and is expanded before checking:
//
//   * directional axioms AxN_fwd / AxN_bwd (N = 9..14) expand to the
//     biconditional instance, an Ax3/Ax4 instance and one MP step;
//   * Lemma 1.1 (|- a -> a) expands to the usual five steps over Ax1/Ax2;
//   * Lemma 1.2 ({a -> b, b -> c} |- a -> c) expands to five steps over
//     Ax1/Ax2 that reference the two cited lines.

#ifndef QN4_HILBERT_HPP_
#define QN4_HILBERT_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qn4/formula.hpp"

namespace qn4 {

enum class AxiomId : std::uint8_t {
  Ax1 = 1, Ax2, Ax3, Ax4, Ax5, Ax6, Ax7, Ax8, Ax9, Ax10, Ax11,
  Ax12, Ax13, Ax14, Ax15, Ax16, Ax17, Ax18, Ax19, Ax20, Ax21, Ax22,
  Ax9Fwd, Ax9Bwd, Ax10Fwd, Ax10Bwd, Ax11Fwd, Ax11Bwd,
  Ax12Fwd, Ax12Bwd, Ax13Fwd, Ax13Bwd, Ax14Fwd, Ax14Bwd,
};

inline constexpr int kAxiomCount = 22;

AxiomId axiom(int number);  // 1..22
int axiom_number(AxiomId id);
bool is_directional(AxiomId id);
// Forward (left-to-right) or backward projection of a biconditional axiom.
AxiomId directional(int number, bool forward);
std::string axiom_name(AxiomId id);
// Accepts "Ax10", "Ax10_fwd", "Ax10_bwd", "Ax10(->)", "Ax10 (<-)" and the
// UTF-8 arrows.
std::optional<AxiomId> axiom_from_name(std::string_view name);

// The scheme over metavariables a, b, c, d. For directional ids, the
// corresponding implication of the biconditional.
const Formula& scheme_of(AxiomId id);

enum class LemmaId : std::uint8_t {
  Identity,  // Lemma 1.1
  Chain,     // Lemma 1.2
};

std::string lemma_name(LemmaId id);
std::optional<LemmaId> lemma_from_name(std::string_view name);

struct PremiseRule {
  std::optional<std::size_t> index;  // into Proof::premises, when given
};

struct AxiomRule {
  AxiomId id;
  std::optional<Substitution> substitution;  // inferred by matching when absent
};

// Modus ponens from two earlier steps; the minor premise and the implication
// may be cited in either order.
struct MpRule {
  std::size_t first;
  std::size_t second;
};

struct LemmaRule {
  LemmaId id;
  std::vector<std::size_t> refs;
};

using Justification = std::variant<PremiseRule, AxiomRule, MpRule, LemmaRule>;

struct ProofStep {
  Formula formula;
  Justification rule;
};

struct Proof {
  std::vector<Formula> premises;
  std::vector<ProofStep> steps;

  const Formula& conclusion() const;
};

struct ProofReport {
  bool accepted = false;
  std::optional<std::size_t> failing_step;  // 0-based index into Proof::steps
  std::string message;
  std::size_t kernel_steps = 0;

  explicit operator bool() const { return accepted; }
};

class ProofError : public std::runtime_error {
 public:
  explicit ProofError(const std::string& message, std::optional<std::size_t> step = std::nullopt);
  std::optional<std::size_t> step() const { return step_; }

 private:
  std::optional<std::size_t> step_;
};

bool is_primitive(const Proof& p);
// Throws ProofError naming the offending step if a macro cannot be expanded.
Proof expand_macros(const Proof& p);
ProofReport check_proof(const Proof& p);

// Applies a substitution to every formula of the proof. The result checks
// whenever the input does.
Proof instantiate(const Proof& p, const Substitution& s);

// Premises equal to `discharged` are removed; the result concludes
// discharged -> p.conclusion() and contains only kernel steps.
Proof deduction(const Proof& p, const Formula& discharged);

Proof lemma_identity(const Formula& f);
Proof lemma_chain(const Proof& first, const Proof& second);

std::array<Formula, 4> delta(const Formula& a, const Formula& b);
Equation e_translate(const Formula& f);

// Numbered listing: "n. formula    justification".
std::string format_proof(const Proof& p);
std::string describe(const Justification& j);

}  // namespace qn4

#endif  // QN4_HILBERT_HPP_

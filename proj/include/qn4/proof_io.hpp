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

// Proof files and the row notation used by derivation tables.
//
// JSON layout (step numbers are 1-based):
//   {"premises": ["p", "p -> q"],
//    "steps": [{"formula": "p", "rule": "premise"},
//              {"formula": "p -> q", "rule": "premise", "args": 2},
//              {"formula": "q", "rule": "mp", "args": [1, 2]},
//              {"formula": "q -> p -> q", "rule": "axiom", "args": "Ax1"},
//              {"formula": "...", "rule": "axiom",
//               "args": {"id": "Ax10_fwd", "subst": {"a": "p", "b": "q"}}},
//              {"formula": "p -> p", "rule": "lemma", "args": "1.1"},
//              {"formula": "...", "rule": "lemma",
//               "args": {"id": "1.2", "refs": [2, 3]}}]}

#ifndef QN4_PROOF_IO_HPP_
#define QN4_PROOF_IO_HPP_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"
#include "qn4/hilbert.hpp"

namespace qn4 {

class ProofFormatError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// "Premise", "Ax3", "Ax10 (->)", "MP, 4, 7", "Lemma 1.1", "Lemma 1.2, 2, 3".
Justification parse_rule(std::string_view text);

struct TableRow {
  std::string formula;
  std::string rule;
};

Proof proof_from_rows(const std::vector<std::string>& premises, const std::vector<TableRow>& rows);

nlohmann::json to_json(const Proof& p);
Proof proof_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ProofReport& r);

}  // namespace qn4

#endif  // QN4_PROOF_IO_HPP_

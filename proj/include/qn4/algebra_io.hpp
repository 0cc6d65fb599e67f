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

// Algebra files: {"size": n, "meet": [[..]], "join": [[..]], "imp": [[..]],
// "neg": [..]} and, for nuclear Brouwerian algebras, "box": [..] instead of
// "neg".

#ifndef QN4_ALGEBRA_IO_HPP_
#define QN4_ALGEBRA_IO_HPP_

#include <filesystem>
#include <variant>

#include "json.hpp"
#include "qn4/algebra.hpp"

namespace qn4 {

nlohmann::json to_json(const FiniteAlgebra& a);
nlohmann::json to_json(const NuclearBrouwerian& b);
nlohmann::json to_json(const Witness& w);
nlohmann::json to_json(const CheckReport& r);

// Both validate; std::invalid_argument on malformed input.
FiniteAlgebra algebra_from_json(const nlohmann::json& j);
NuclearBrouwerian base_from_json(const nlohmann::json& j);

using AnyAlgebra = std::variant<FiniteAlgebra, NuclearBrouwerian>;
AnyAlgebra any_from_json(const nlohmann::json& j);  // by presence of "box"

nlohmann::json read_json(const std::filesystem::path& path);
void write_json(const std::filesystem::path& path, const nlohmann::json& j);

}  // namespace qn4

#endif  // QN4_ALGEBRA_IO_HPP_

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


// Python bindings. Proofs, algebras and reports cross the boundary as plain
// dicts in the same layout as the JSON files.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qn4/algebra_io.hpp"
#include "qn4/canonical.hpp"
#include "qn4/catalog.hpp"
#include "qn4/enumerate.hpp"
#include "qn4/proof_io.hpp"
#include "qn4/suites.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

json to_cpp(const py::handle& obj) {
  return json::parse(py::module_::import("json").attr("dumps")(obj).cast<std::string>());
}

py::object to_py(const json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

qn4::FiniteAlgebra algebra(const py::handle& obj) { return qn4::algebra_from_json(to_cpp(obj)); }

py::dict composite(const qn4::CompositeReport& c) {
  json items = json::array();
  for (const auto& item : c.items) items.push_back(qn4::to_json(item));
  return to_py({{"passed", c.passed()}, {"violated", c.violated()}, {"items", items}});
}

}  // namespace

PYBIND11_MODULE(qn4, m) {
  m.doc() = "Proof checking and finite-model verification for the logic QN4";

  py::register_exception<qn4::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<qn4::ProofFormatError>(m, "ProofFormatError", PyExc_ValueError);
  py::register_exception<qn4::ProofError>(m, "ProofError", PyExc_ValueError);
  py::register_exception<qn4::TwistError>(m, "TwistError", PyExc_ValueError);
  py::register_exception<qn4::QuotientError>(m, "QuotientError", PyExc_ValueError);

  py::class_<qn4::Formula>(m, "Formula")
      .def_property_readonly("depth", &qn4::Formula::depth)
      .def_property_readonly("size", &qn4::Formula::size)
      .def_property_readonly("is_core", &qn4::Formula::is_core)
      .def("variables", [](const qn4::Formula& f) { return qn4::variables(f); })
      .def("__str__", [](const qn4::Formula& f) { return qn4::render(f); })
      .def("__repr__", [](const qn4::Formula& f) { return "Formula('" + qn4::render(f) + "')"; })
      .def("__eq__", [](const qn4::Formula& a, const qn4::Formula& b) { return a == b; })
      .def("__hash__", [](const qn4::Formula& f) { return std::hash<std::string>{}(qn4::render(f)); });

  m.def("parse", &qn4::parse, py::arg("text"), "Parse and expand derived connectives.");
  m.def("parse_extended", &qn4::parse_extended, py::arg("text"));
  m.def("render", py::overload_cast<const qn4::Formula&>(&qn4::render), py::arg("formula"));

  m.def(
      "check_proof", [](const py::dict& proof) { return to_py(qn4::to_json(qn4::check_proof(qn4::proof_from_json(to_cpp(proof))))); },
      py::arg("proof"));
  m.def(
      "deduction",
      [](const py::dict& proof, const std::string& discharge) {
        return to_py(qn4::to_json(qn4::deduction(qn4::proof_from_json(to_cpp(proof)), qn4::parse(discharge))));
      },
      py::arg("proof"), py::arg("discharge"));
  m.def("derivations", [] {
    std::vector<std::string> names;
    for (const auto& e : qn4::builtin_derivations()) names.push_back(e.name);
    return names;
  });
  m.def(
      "derivation",
      [](const std::string& name) {
        const qn4::CatalogEntry* e = qn4::find_derivation(name);
        if (!e) throw py::key_error(name);
        return to_py(qn4::to_json(e->proof));
      },
      py::arg("name"));

  m.def(
      "eval",
      [](const py::dict& a, const std::string& formula, const std::map<std::string, qn4::Element>& values) {
        return qn4::eval(algebra(a), qn4::parse(formula), values);
      },
      py::arg("algebra"), py::arg("formula"), py::arg("values"));
  m.def(
      "check_equation",
      [](const py::dict& a, const std::string& equation) {
        const qn4::Equation e = qn4::parse_equation(equation);
        return to_py(qn4::to_json(qn4::check_equation(algebra(a), e)));
      },
      py::arg("algebra"), py::arg("equation"));
  m.def(
      "is_qn4",
      [](const py::dict& a, const std::string& method) {
        if (method == "relational") return composite(qn4::is_qn4_relational(algebra(a)));
        if (method == "equational") return composite(qn4::is_qn4_equational(algebra(a)));
        throw py::value_error("method must be 'relational' or 'equational'");
      },
      py::arg("algebra"), py::arg("method") = "relational");
  m.def("is_n4", [](const py::dict& a) { return qn4::is_n4(algebra(a)).passed; }, py::arg("algebra"));
  m.def(
      "is_quasi_nelson", [](const py::dict& a) { return qn4::is_quasi_nelson(algebra(a)).passed; },
      py::arg("algebra"));
  m.def(
      "canonical_key", [](const py::dict& a) { return py::bytes(qn4::canonical_key(algebra(a))); },
      py::arg("algebra"));

  m.def(
      "full_twist", [](const py::dict& b) { return to_py(qn4::to_json(qn4::full_twist(qn4::base_from_json(to_cpp(b))))); },
      py::arg("base"));
  m.def(
      "twist_subalgebras",
      [](const py::dict& b, std::size_t bound) {
        py::list out;
        for (const auto& t : qn4::twist_subalgebras(qn4::base_from_json(to_cpp(b)), true, bound)) {
          py::dict d;
          d["carrier"] = t.carrier;
          d["algebra"] = to_py(qn4::to_json(t.algebra));
          out.append(d);
        }
        return out;
      },
      py::arg("base"), py::arg("bound") = 16);
  m.def(
      "represent",
      [](const py::dict& a) {
        const qn4::Representation r = qn4::represent(algebra(a));
        py::dict d;
        d["base"] = to_py(qn4::to_json(r.quotient.algebra));
        d["twist"] = to_py(qn4::to_json(r.twist.algebra));
        d["carrier"] = r.twist.carrier;
        d["iota"] = r.iota;
        return d;
      },
      py::arg("algebra"));

  m.def(
      "zoo",
      [](std::size_t base_size, std::size_t bound) {
        const qn4::ModelZoo zoo = qn4::build_zoo(base_size, bound);
        py::list models;
        for (const auto& z : zoo.models) {
          py::dict d;
          d["algebra"] = to_py(qn4::to_json(z.algebra()));
          d["base"] = z.base;
          d["carrier"] = z.twist.carrier;
          d["qn4"] = z.qn4;
          d["n4"] = z.n4;
          d["quasi_nelson"] = z.quasi_nelson;
          models.append(d);
        }
        py::list bases;
        for (const auto& b : zoo.bases) bases.append(to_py(qn4::to_json(b.algebra)));
        py::dict out;
        out["bases"] = bases;
        out["models"] = models;
        return out;
      },
      py::arg("base_size") = 4, py::arg("bound") = 16);
  m.def("suite_names", &qn4::suite_names);
  m.def(
      "run_suite",
      [](const std::string& name, std::size_t base_size, std::size_t bound, std::size_t jobs) {
        const qn4::SuiteInput in = qn4::suite_input(qn4::build_zoo(base_size, bound));
        qn4::SuiteResult res;
        {
          py::gil_scoped_release release;
          res = qn4::run_suite(name, in, {jobs});
        }
        py::dict d;
        d["summary"] = to_py(res.summary(false));
        d["records"] = to_py(json(res.records));
        return d;
      },
      py::arg("name"), py::arg("base_size") = 4, py::arg("bound") = 16, py::arg("jobs") = 1);
}

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


#include <filesystem>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "qn4/algebra_io.hpp"
#include "qn4/suites.hpp"

using namespace qn4;
using namespace qn4::testing;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const SuiteInput& input() {
  static const SuiteInput in = suite_input(default_zoo());
  return in;
}

}  // namespace

TEST_CASE("every suite passes on the default zoo") {
  for (const auto& name : suite_names()) {
    const SuiteResult r = run_suite(name, input());
    INFO(name);
    CHECK(r.passed());
    CHECK(r.checks > 0);
    CHECK(r.records.size() >= r.checks);
  }
}

TEST_CASE("suite input keeps QN4 models and names them by zoo index") {
  const SuiteInput& in = input();
  CHECK(in.models.size() == 71);
  CHECK(in.bases.size() == 18);
  CHECK(in.models.front().id == "model_000");
  CHECK(in.models.back().id == "model_070");
}

TEST_CASE("first-component laws cover Ax9 to Ax22 on every twist model") {
  const SuiteResult r = run_suite("axioms", input());
  std::size_t pi1 = 0;
  for (const auto& rec : r.records)
    if (rec.at("check").get<std::string>().rfind("pi1(", 0) == 0) ++pi1;
  CHECK(pi1 == 14 * input().models.size());
}

TEST_CASE("a single corrupted cell is caught") {
  std::size_t corrupted = 0;
  for (const auto& s : input().models) {
    const std::size_t n = s.algebra.size;
    if (n < 2 || n > 4) continue;
    for (int op = 0; op < 4; ++op)
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < (op == 3 ? 1 : n); ++y) {
          Subject c = s;
          c.twist.reset();
          if (op == 3) {
            c.algebra.neg[x] = static_cast<Element>((c.algebra.neg[x] + 1) % n);
          } else {
            Table& t = op == 0 ? c.algebra.meet : op == 1 ? c.algebra.join : c.algebra.imp;
            t.at(x, y) = static_cast<Element>((t(x, y) + 1) % n);
          }
          const SuiteInput one{{c}, {}};
          ++corrupted;
          CHECK((!run_suite("translation", one).passed() || !run_suite("qn4", one).passed()));
        }
  }
  CHECK(corrupted > 100);
}

TEST_CASE("failures write witness files") {
  const fs::path dir = fs::temp_directory_path() / "qn4_witnesses";
  fs::remove_all(dir);
  Subject bad = input().models[5];
  bad.twist.reset();
  bad.algebra.imp.at(0, 0) = static_cast<Element>((bad.algebra.imp(0, 0) + 1) % bad.algebra.size);
  const SuiteResult r = run_suite("translation", SuiteInput{{bad}, {}}, SuiteOptions{1, false, dir});
  REQUIRE_FALSE(r.passed());
  std::size_t with_files = 0;
  for (const auto& rec : r.records) {
    if (rec.at("passed").get<bool>()) continue;
    REQUIRE(rec.contains("witness_file"));
    const json w = read_json(rec.at("witness_file").get<std::string>());
    CHECK(w.at("subject") == bad.id);
    CHECK(w.at("report").at("passed") == false);
    ++with_files;
  }
  CHECK(with_files == r.failures);
  fs::remove_all(dir);
}

TEST_CASE("reports are deterministic and independent of jobs") {
  for (const char* name : {"axioms", "catalog", "fiber"}) {
    std::ostringstream one, four;
    write_report(one, run_suite(name, input(), {1}), false);
    write_report(four, run_suite(name, input(), {4}), false);
    CHECK(one.str() == four.str());
  }
  std::ostringstream timed;
  write_report(timed, run_suite("mp", input()), true);
  CHECK(timed.str().find("\"seconds\"") != std::string::npos);
}

TEST_CASE("summary record") {
  const SuiteResult r = run_suite("separation", input());
  std::ostringstream out;
  write_report(out, r, false);
  std::string last, line;
  std::istringstream in(out.str());
  while (std::getline(in, line)) last = line;
  const json s = json::parse(last);
  CHECK(s.at("summary") == true);
  CHECK(s.at("suite") == "separation");
  CHECK(s.at("checks") == 2);
  CHECK(s.at("failures") == 0);
  CHECK_FALSE(s.contains("seconds"));
}

TEST_CASE("unknown suites are rejected") {
  CHECK_FALSE(is_suite("everything"));
  CHECK_THROWS_AS(run_suite("everything", input()), std::invalid_argument);
}

TEST_CASE("mutants") {
  const SuiteResult a = run_mutants(input(), MutantOptions{3, 500, 4, 3});
  const SuiteResult b = run_mutants(input(), MutantOptions{3, 500, 4, 3}, {4});
  CHECK(a.passed());
  CHECK(a.checks == 500);
  CHECK(a.records == b.records);
  std::size_t qn4 = 0;
  for (const auto& r : a.records) qn4 += r.at("qn4").get<bool>();
  CHECK(qn4 < 500);
  CHECK_THROWS_AS(run_mutants(SuiteInput{}, {}), std::invalid_argument);
}

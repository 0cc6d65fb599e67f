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

#include "qn4/suites.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <thread>

#include "qn4/algebra_io.hpp"
#include "qn4/catalog.hpp"
#include "qn4/random.hpp"

namespace qn4 {

using nlohmann::json;

namespace {

// Runs fn(0..n-1) on up to `jobs` threads; results stay in index order.
std::vector<std::vector<json>> parallel_map(std::size_t n, std::size_t jobs,
                                            const std::function<std::vector<json>(std::size_t)>& fn) {
  std::vector<std::vector<json>> out(n);
  jobs = std::max<std::size_t>(1, std::min(jobs, n));
  if (jobs == 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(jobs);
  for (std::size_t w = 0; w < jobs; ++w)
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += jobs) out[i] = fn(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

std::string slug(const std::string& s) {
  std::string out;
  for (char ch : s) {
    const unsigned char u = static_cast<unsigned char>(ch);
    if (std::isalnum(u) || ch == '.' || ch == '_') {
      out += ch;
    } else if (!out.empty() && out.back() != '-') {
      out += '-';
    }
  }
  while (!out.empty() && out.back() == '-') out.pop_back();
  return out;
}

class Recorder {
 public:
  Recorder(std::string suite, const SuiteOptions& opt) : suite_(std::move(suite)), opt_(opt) {}

  json check(const std::string& subject, const CheckReport& r, const json& context = nullptr) const {
    json rec{{"suite", suite_}, {"subject", subject}, {"check", r.law}, {"passed", r.passed}};
    if (r.assignments) rec["assignments"] = r.assignments;
    if (!r.detail.empty()) rec["detail"] = r.detail;
    if (r.informational) rec["informational"] = true;
    if (r.witness) rec["witness"] = to_json(*r.witness);
    if (!r.passed && !r.informational && !opt_.witness_dir.empty()) {
      namespace fs = std::filesystem;
      fs::create_directories(opt_.witness_dir);
      const fs::path file = opt_.witness_dir / (slug(suite_ + "-" + subject + "-" + r.law) + ".json");
      json w{{"suite", suite_}, {"subject", subject}, {"report", to_json(r)}};
      if (!context.is_null()) w["context"] = context;
      write_json(file, w);
      rec["witness_file"] = file.string();
    }
    return rec;
  }

 private:
  std::string suite_;
  const SuiteOptions& opt_;
};

// ---------------------------------------------------------------------------
// First-component identities on twist structures.

struct Pi1Law {
  int axiom;
  std::size_t arity;
  const char* statement;
  bool (*holds)(const NuclearBrouwerian&, const Pair*);
};

Element M(const NuclearBrouwerian& b, Element x, Element y) { return b.meet(x, y); }
Element J(const NuclearBrouwerian& b, Element x, Element y) { return b.join(x, y); }
Element I(const NuclearBrouwerian& b, Element x, Element y) { return b.imp(x, y); }
Element Bx(const NuclearBrouwerian& b, Element x) { return b.box[x]; }

Pair Ng(const NuclearBrouwerian& b, Pair x) { return twist_neg(b, x); }
Pair Mt(const NuclearBrouwerian& b, Pair x, Pair y) { return twist_meet(b, x, y); }
Pair Jn(const NuclearBrouwerian& b, Pair x, Pair y) { return twist_join(b, x, y); }
Pair Im(const NuclearBrouwerian& b, Pair x, Pair y) { return twist_imp(b, x, y); }

bool both(Element l, Element r, Element e) { return l == e && r == e; }

const std::vector<Pi1Law>& pi1_laws() {
  static const std::vector<Pi1Law> laws = {
      {9, 2, "pi1 ~(x \\/ y) = pi1 (~x /\\ ~y) = a2 /\\ b2",
       [](const NuclearBrouwerian& b, const Pair* p) {
         return both(Ng(b, Jn(b, p[0], p[1])).first, Mt(b, Ng(b, p[0]), Ng(b, p[1])).first,
                     M(b, p[0].second, p[1].second));
       }},
      {10, 2, "pi1 ~(x -> y) = pi1 ~~(x /\\ ~y) = box a1 /\\ b2",
       [](const NuclearBrouwerian& b, const Pair* p) {
         return both(Ng(b, Im(b, p[0], p[1])).first, Ng(b, Ng(b, Mt(b, p[0], Ng(b, p[1])))).first,
                     M(b, Bx(b, p[0].first), p[1].second));
       }},
      {11, 3, "pi1 ~(x /\\ (y /\\ z)) = pi1 ~((x /\\ y) /\\ z) = box(a2 \\/ b2 \\/ c2)",
       [](const NuclearBrouwerian& b, const Pair* p) {
         return both(Ng(b, Mt(b, p[0], Mt(b, p[1], p[2]))).first, Ng(b, Mt(b, Mt(b, p[0], p[1]), p[2])).first,
                     Bx(b, J(b, J(b, p[0].second, p[1].second), p[2].second)));
       }},
      {12, 3, "pi1 ~(x /\\ (y \\/ z)) = pi1 ~(x /\\ y \\/ x /\\ z) = box(a2 \\/ b2 /\\ c2)",
       [](const NuclearBrouwerian& b, const Pair* p) {
         return both(Ng(b, Mt(b, p[0], Jn(b, p[1], p[2]))).first,
                     Ng(b, Jn(b, Mt(b, p[0], p[1]), Mt(b, p[0], p[2]))).first,
                     Bx(b, J(b, p[0].second, M(b, p[1].second, p[2].second))));
       }},
      {13, 3, "pi1 ~(x \\/ y /\\ z) = pi1 ~((x \\/ y) /\\ (x \\/ z)) = a2 /\\ box(b2 \\/ c2)",
       [](const NuclearBrouwerian& b, const Pair* p) {
         return both(Ng(b, Jn(b, p[0], Mt(b, p[1], p[2]))).first,
                     Ng(b, Mt(b, Jn(b, p[0], p[1]), Jn(b, p[0], p[2]))).first,
                     M(b, p[0].second, Bx(b, J(b, p[1].second, p[2].second))));
       }},
      {14, 2, "pi1 ~~(x /\\ y) = pi1 (~~x /\\ ~~y) = box a1 /\\ box b1",
       [](const NuclearBrouwerian& b, const Pair* p) {
         return both(Ng(b, Ng(b, Mt(b, p[0], p[1]))).first, Mt(b, Ng(b, Ng(b, p[0])), Ng(b, Ng(b, p[1]))).first,
                     M(b, Bx(b, p[0].first), Bx(b, p[1].first)));
       }},
      {15, 1, "pi1 ~~x = box a1 and a1 <= box a1",
       [](const NuclearBrouwerian& b, const Pair* p) {
         const Element e = Bx(b, p[0].first);
         return Ng(b, Ng(b, p[0])).first == e && b.leq(p[0].first, e);
       }},
      {16, 1, "pi1 (~x -> ~(x -> x)) = a2 -> (box a1 /\\ a2) and a1 <= it",
       [](const NuclearBrouwerian& b, const Pair* p) {
         const Element e = I(b, p[0].second, M(b, Bx(b, p[0].first), p[0].second));
         return Im(b, Ng(b, p[0]), Ng(b, Im(b, p[0], p[0]))).first == e && b.leq(p[0].first, e);
       }},
      {17, 2, "pi1 (~~x -> ~~y) = box a1 -> box b1 and a1 -> b1 <= it",
       [](const NuclearBrouwerian& b, const Pair* p) {
         const Element e = I(b, Bx(b, p[0].first), Bx(b, p[1].first));
         return Im(b, Ng(b, Ng(b, p[0])), Ng(b, Ng(b, p[1]))).first == e &&
                b.leq(I(b, p[0].first, p[1].first), e);
       }},
      {18, 2, "pi1 ~(x /\\ y) = box(a2 \\/ b2) and a2 <= it",
       [](const NuclearBrouwerian& b, const Pair* p) {
         const Element e = Bx(b, J(b, p[0].second, p[1].second));
         return Ng(b, Mt(b, p[0], p[1])).first == e && b.leq(p[0].second, e);
       }},
      {19, 2, "pi1 ~(x /\\ y) = pi1 ~(y /\\ x) = box(a2 \\/ b2)",
       [](const NuclearBrouwerian& b, const Pair* p) {
         return both(Ng(b, Mt(b, p[0], p[1])).first, Ng(b, Mt(b, p[1], p[0])).first,
                     Bx(b, J(b, p[0].second, p[1].second)));
       }},
      {20, 2, "pi1 (~(x /\\ y) -> ~y) = box(a2 \\/ b2) -> b2 and a2 -> b2 <= it",
       [](const NuclearBrouwerian& b, const Pair* p) {
         const Element e = I(b, Bx(b, J(b, p[0].second, p[1].second)), p[1].second);
         return Im(b, Ng(b, Mt(b, p[0], p[1])), Ng(b, p[1])).first == e &&
                b.leq(I(b, p[0].second, p[1].second), e);
       }},
      {21, 4,
       "pi1 (~(x /\\ z) -> ~(y /\\ w)) = box(a2 \\/ c2) -> box(b2 \\/ d2) and (a2 -> b2) /\\ (c2 -> d2) <= it",
       [](const NuclearBrouwerian& b, const Pair* p) {
         const Element e = I(b, Bx(b, J(b, p[0].second, p[2].second)), Bx(b, J(b, p[1].second, p[3].second)));
         const Element h = M(b, I(b, p[0].second, p[1].second), I(b, p[2].second, p[3].second));
         return Im(b, Ng(b, Mt(b, p[0], p[2])), Ng(b, Mt(b, p[1], p[3]))).first == e && b.leq(h, e);
       }},
      {22, 1, "pi1 ~~~x = box a2 = a2 = pi1 ~x",
       [](const NuclearBrouwerian& b, const Pair* p) {
         return Ng(b, Ng(b, Ng(b, p[0]))).first == Bx(b, p[0].second) && Bx(b, p[0].second) == p[0].second &&
                Ng(b, p[0]).first == p[0].second;
       }},
  };
  return laws;
}

CheckReport check_pi1(const TwistStructure& t, const Pi1Law& law) {
  static const char* names[] = {"x", "y", "z", "w"};
  CheckReport r;
  r.law = "pi1(Ax" + std::to_string(law.axiom) + ")";
  r.detail = law.statement;
  const std::size_t n = t.carrier.size();
  std::vector<std::size_t> idx(law.arity, 0);
  std::vector<Pair> args(law.arity);
  while (true) {
    for (std::size_t k = 0; k < law.arity; ++k) args[k] = t.carrier[idx[k]];
    ++r.assignments;
    if (!law.holds(t.base, args.data())) {
      r.passed = false;
      Witness w;
      for (std::size_t k = 0; k < law.arity; ++k) w.assignment[names[k]] = static_cast<Element>(idx[k]);
      r.witness = w;
      return r;
    }
    std::size_t k = law.arity;
    while (k > 0 && ++idx[k - 1] == n) idx[--k] = 0;
    if (k == 0) break;
  }
  return r;
}

// ---------------------------------------------------------------------------

using SubjectFn = std::function<std::vector<json>(const Subject&, const Recorder&)>;

std::vector<json> over_models(const SuiteInput& in, const SuiteOptions& opt, const Recorder& rec,
                              const SubjectFn& fn) {
  auto parts = parallel_map(in.models.size(), opt.jobs, [&](std::size_t i) { return fn(in.models[i], rec); });
  std::vector<json> out;
  for (auto& p : parts)
    for (auto& r : p) out.push_back(std::move(r));
  return out;
}

std::vector<json> axioms_suite(const Subject& s, const Recorder& rec) {
  std::vector<json> out;
  for (int n = 1; n <= kAxiomCount; ++n)
    out.push_back(rec.check(s.id, check_equation(s.algebra, e_translate(scheme_of(axiom(n))),
                                                 "E(Ax" + std::to_string(n) + ")")));
  if (s.twist)
    for (const auto& law : pi1_laws()) out.push_back(rec.check(s.id, check_pi1(*s.twist, law)));
  return out;
}

std::vector<json> mp_suite(const Subject& s, const Recorder& rec) {
  const QuasiEquation q{{e_translate(parse("x")), e_translate(parse("x -> y"))}, e_translate(parse("y"))};
  return {rec.check(s.id, check_quasiequation(s.algebra, q, "MP closure"))};
}

std::vector<json> translation_suite(const Subject& s, const Recorder& rec) {
  std::vector<json> out;
  for (int n = 1; n <= kAxiomCount; ++n)
    out.push_back(rec.check(s.id, check_equation(s.algebra, e_translate(scheme_of(axiom(n))),
                                                 "axiom equation: E(Ax" + std::to_string(n) + ")")));
  out.push_back(rec.check(s.id, check_equation(s.algebra, e_translate(parse("x -> x")), "reflexivity: E(x -> x)")));
  out.push_back(rec.check(s.id, check_equation(s.algebra, e_translate(parse("~x -> ~x")), "reflexivity: E(~x -> ~x)")));
  QuasiEquation q3{{}, {var("x"), var("y")}};
  for (const auto& f : delta(var("x"), var("y"))) q3.antecedents.push_back(e_translate(f));
  out.push_back(rec.check(s.id, check_quasiequation(s.algebra, q3, "antisymmetry: E(Delta(x, y)) implies x = y")));
  const QuasiEquation q4{{e_translate(parse("x")), e_translate(parse("x -> y"))}, e_translate(parse("y"))};
  out.push_back(rec.check(s.id, check_quasiequation(s.algebra, q4, "MP closure: E(x), E(x -> y) imply E(y)")));
  for (const auto& ne : qn4_identities()) out.push_back(rec.check(s.id, check_equation(s.algebra, ne.equation, ne.name)));
  return out;
}

std::vector<json> qn4_suite(const Subject& s, const Recorder& rec) {
  std::vector<json> out;
  const CompositeReport rel = is_qn4_relational(s.algebra);
  const CompositeReport eq = is_qn4_equational(s.algebra);
  for (const auto& [rep, tag] : {std::pair{&rel, "relational"}, std::pair{&eq, "equational"}}) {
    CheckReport r{std::string("QN4 (") + tag + ")", rep->passed(), {}, {}, 0};
    for (const auto& item : rep->items) {
      r.assignments += item.assignments;
      if (!item.passed && !item.informational && !r.witness) {
        r.witness = item.witness;
        r.detail = item.law + (item.detail.empty() ? "" : ": " + item.detail);
      }
    }
    out.push_back(rec.check(s.id, r));
  }
  out.push_back(rec.check(s.id, CheckReport{"relational and equational agree", rel.passed() == eq.passed(), {}, {}, 0}));
  const CheckReport n4 = is_n4(s.algebra), qn = is_quasi_nelson(s.algebra);
  if (s.n4) {
    CheckReport r{"N4 flag", n4.passed == *s.n4, n4.witness, "recorded " + std::string(*s.n4 ? "true" : "false"), 0};
    out.push_back(rec.check(s.id, r));
  }
  if (s.quasi_nelson) {
    CheckReport r{"quasi-Nelson flag", qn.passed == *s.quasi_nelson, qn.witness,
                  "recorded " + std::string(*s.quasi_nelson ? "true" : "false"), 0};
    out.push_back(rec.check(s.id, r));
  }
  return out;
}

std::vector<json> representation_suite(const Subject& s, const Recorder& rec) {
  CheckReport r{"represent", true, {}, {}, 0};
  json context;
  try {
    const Representation rep = represent(s.algebra);
    r.detail = "B(A) has " + std::to_string(rep.quotient.algebra.size) + " elements";
    const bool same = canonical_key(rep.twist.algebra) == canonical_key(s.algebra);
    if (!same) {
      r.passed = false;
      r.detail = "image is not isomorphic to the algebra";
    }
    context = {{"base", to_json(rep.quotient.algebra)}};
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail = e.what();
  }
  return {rec.check(s.id, r, context)};
}

std::vector<json> catalog_suite(const SuiteInput& in, const SuiteOptions& opt, const Recorder& rec) {
  const auto& entries = builtin_derivations();
  auto parts = parallel_map(entries.size(), opt.jobs, [&](std::size_t i) {
    const CatalogEntry& e = entries[i];
    std::vector<json> out;
    const ProofReport pr = check_proof(e.proof);
    CheckReport r{"check_proof", pr.accepted, {}, pr.message, 0};
    json rj = rec.check(e.name, r);
    rj["origin"] = origin_name(e.origin);
    rj["steps"] = e.proof.steps.size();
    rj["kernel_steps"] = pr.kernel_steps;
    out.push_back(std::move(rj));
    QuasiEquation q{{}, e_translate(e.proof.conclusion())};
    for (const auto& g : e.proof.premises) q.antecedents.push_back(e_translate(g));
    CheckReport sound{"sound on the zoo", true, {}, {}, 0};
    for (const auto& m : in.models) {
      CheckReport c = check_quasiequation(m.algebra, q);
      sound.assignments += c.assignments;
      if (!c.passed) {
        sound.passed = false;
        sound.witness = c.witness;
        sound.detail = m.id;
        break;
      }
    }
    out.push_back(rec.check(e.name, sound));
    return out;
  });
  std::vector<json> out;
  for (auto& p : parts)
    for (auto& r : p) out.push_back(std::move(r));
  return out;
}

std::vector<json> separation_suite(const SuiteInput& in, const Recorder& rec) {
  const Equation involutive{parse("~~x"), var("x")};
  const Equation explosive = preceq_equation(parse("x /\\ ~x"), var("y"));
  std::vector<json> out;
  for (const auto& [law, eq, getter] :
       {std::tuple{"non-involutive QN4-lattice", involutive, &is_n4},
        std::tuple{"non-explosive QN4-lattice", explosive, &is_quasi_nelson}}) {
    CheckReport r{law, false, {}, "none found", 0};
    for (const auto& m : in.models) {
      if (!is_qn4_relational(m.algebra).passed()) continue;
      const CheckReport c = getter(m.algebra);
      if (!c.passed && c.witness && refutes(m.algebra, eq, *c.witness)) {
        r.passed = true;
        r.witness = c.witness;
        r.detail = m.id + " refutes " + render(eq);
        break;
      }
    }
    out.push_back(rec.check("zoo", r));
  }
  return out;
}

std::vector<json> fiber_suite(const SuiteInput& in, const SuiteOptions& opt, const Recorder& rec) {
  auto parts = parallel_map(in.bases.size(), opt.jobs, [&](std::size_t i) {
    char id[32];
    std::snprintf(id, sizeof id, "base_%03zu", i);
    return std::vector<json>{rec.check(id, fiber_closure(in.bases[i]), json{{"base", to_json(in.bases[i])}})};
  });
  std::vector<json> out;
  for (auto& p : parts)
    for (auto& r : p) out.push_back(std::move(r));
  return out;
}

}  // namespace

SuiteInput suite_input(const ModelZoo& zoo) {
  SuiteInput in;
  for (const auto& b : zoo.bases) in.bases.push_back(b.algebra);
  for (std::size_t k = 0; k < zoo.models.size(); ++k) {
    const ZooModel& m = zoo.models[k];
    if (!m.qn4) continue;
    char id[32];
    std::snprintf(id, sizeof id, "model_%03zu", k);
    Subject s{id, m.algebra(), m.twist, m.n4, m.quasi_nelson};
    if (!m.matches_carrier) s.twist.reset();
    in.models.push_back(std::move(s));
  }
  return in;
}

json SuiteResult::summary(bool timing) const {
  json s{{"suite", suite},      {"summary", true},           {"subjects", subjects}, {"checks", checks},
         {"failures", failures}, {"assignments", assignments}, {"passed", passed()}};
  if (timing) s["seconds"] = seconds;
  return s;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"axioms", "mp",         "translation", "qn4",
                                                 "representation", "fiber", "separation", "catalog"};
  return names;
}

bool is_suite(const std::string& name) {
  const auto& n = suite_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

SuiteResult run_suite(const std::string& name, const SuiteInput& input, const SuiteOptions& options) {
  if (!is_suite(name)) throw std::invalid_argument("unknown suite '" + name + "'");
  const auto start = std::chrono::steady_clock::now();
  const Recorder rec(name, options);
  SuiteResult r;
  r.suite = name;
  r.subjects = input.models.size();
  if (name == "axioms") {
    r.records = over_models(input, options, rec, axioms_suite);
  } else if (name == "mp") {
    r.records = over_models(input, options, rec, mp_suite);
  } else if (name == "translation") {
    r.records = over_models(input, options, rec, translation_suite);
  } else if (name == "qn4") {
    r.records = over_models(input, options, rec, qn4_suite);
  } else if (name == "representation") {
    r.records = over_models(input, options, rec, representation_suite);
  } else if (name == "fiber") {
    r.subjects = input.bases.size();
    r.records = fiber_suite(input, options, rec);
  } else if (name == "separation") {
    r.records = separation_suite(input, rec);
  } else {
    r.subjects = builtin_derivations().size();
    r.records = catalog_suite(input, options, rec);
  }
  for (const auto& rec_j : r.records) {
    if (rec_j.value("informational", false)) continue;
    ++r.checks;
    if (!rec_j.at("passed").get<bool>()) ++r.failures;
    r.assignments += rec_j.value("assignments", std::uint64_t{0});
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

SuiteResult run_mutants(const SuiteInput& input, const MutantOptions& m, const SuiteOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<const Subject*> sources;
  for (const auto& s : input.models)
    if (s.algebra.size <= m.max_size) sources.push_back(&s);
  if (sources.empty()) throw std::invalid_argument("no model of size <= " + std::to_string(m.max_size));

  // Draw every mutant up front so the result does not depend on jobs.
  Rng rng(m.seed);
  std::vector<std::pair<const Subject*, FiniteAlgebra>> mutants;
  mutants.reserve(m.count);
  for (std::size_t k = 0; k < m.count; ++k) {
    const Subject* s = sources[std::uniform_int_distribution<std::size_t>(0, sources.size() - 1)(rng)];
    mutants.emplace_back(s, mutate(s->algebra, rng, m.max_changes));
  }

  const Recorder rec("mutants", options);
  auto parts = parallel_map(mutants.size(), options.jobs, [&](std::size_t i) {
    const auto& [source, a] = mutants[i];
    const bool rel = is_qn4_relational(a).passed();
    const bool eq = is_qn4_equational(a).passed();
    char id[32];
    std::snprintf(id, sizeof id, "mutant_%05zu", i);
    CheckReport r{"relational and equational agree", rel == eq, {}, {}, 0};
    if (!r.passed) r.detail = std::string("relational ") + (rel ? "passes" : "fails") + ", equational " + (eq ? "passes" : "fails");
    json j = rec.check(id, r, json{{"source", source->id}, {"algebra", to_json(a)}});
    j["source"] = source->id;
    j["qn4"] = rel;
    return std::vector<json>{std::move(j)};
  });

  SuiteResult r;
  r.suite = "mutants";
  r.subjects = mutants.size();
  for (auto& p : parts)
    for (auto& j : p) {
      ++r.checks;
      if (!j.at("passed").get<bool>()) ++r.failures;
      r.records.push_back(std::move(j));
    }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

void write_report(std::ostream& out, const SuiteResult& r, bool timing) {
  for (const auto& rec : r.records) out << rec.dump() << '\n';
  out << r.summary(timing).dump() << '\n';
}

}  // namespace qn4

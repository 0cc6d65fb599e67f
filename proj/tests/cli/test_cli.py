# Copyright 2026 The qn4 Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ==============================================================================
"""End-to-end checks of the qn4 command line: exit codes and report formats.

Usage: test_cli.py QN4_BINARY DATA_DIR
"""

import json
import os
import shutil
import subprocess
import sys
import tempfile
import unittest

QN4 = None
DATA = None


def run(*args):
    p = subprocess.run([QN4, *args], capture_output=True, text=True)
    return p.returncode, p.stdout, p.stderr


def records(stdout):
    return [json.loads(line) for line in stdout.splitlines() if line.strip()]


def data(name):
    return os.path.join(DATA, name)


class Parse(unittest.TestCase):
    def test_expands_derived(self):
        code, out, _ = run("parse", "p => q")
        self.assertEqual(code, 0)
        r = json.loads(out)
        self.assertEqual(r["formula"], "(p -> q) /\\ (~q -> ~p)")
        self.assertEqual(r["extended"], "p => q")
        self.assertEqual(r["variables"], ["p", "q"])

    def test_syntax_error_is_usage(self):
        code, out, err = run("parse", "p -> ")
        self.assertEqual(code, 2)
        self.assertEqual(out, "")
        self.assertIn("offset", err)

    def test_no_subcommand(self):
        self.assertEqual(run()[0], 2)
        self.assertEqual(run("frobnicate")[0], 2)

    def test_help(self):
        code, out, _ = run("--help")
        self.assertEqual(code, 0)
        self.assertIn("check-proof", out)


class Proofs(unittest.TestCase):
    def test_accepts(self):
        code, out, _ = run("check-proof", data("mp.json"))
        self.assertEqual(code, 0)
        r = json.loads(out)
        self.assertTrue(r["accepted"])
        self.assertEqual(r["sequent"], "p, p -> q |- ~~q")

    def test_directional_axioms_and_lemmas(self):
        code, out, _ = run("check-proof", data("directional.json"))
        self.assertEqual(code, 0)
        self.assertGreater(json.loads(out)["kernel_steps"], 6)

    def test_rejects_with_step(self):
        code, out, _ = run("check-proof", data("bad_step.json"))
        self.assertEqual(code, 1)
        r = json.loads(out)
        self.assertFalse(r["accepted"])
        self.assertEqual(r["failing_step"], 3)

    def test_missing_file(self):
        self.assertEqual(run("check-proof", data("nope.json"))[0], 2)

    def test_malformed_file(self):
        with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
            f.write('{"premises": [], "steps": [{"formula": "p", "rule": "magic"}]}')
        try:
            self.assertEqual(run("check-proof", f.name)[0], 2)
        finally:
            os.unlink(f.name)

    def test_deduction(self):
        with tempfile.TemporaryDirectory() as tmp:
            out_path = os.path.join(tmp, "d.json")
            code, out, _ = run("derive", "deduction", data("mp.json"), "--discharge", "p", "--out", out_path)
            self.assertEqual(code, 0)
            r = json.loads(out)
            self.assertTrue(r["accepted"])
            self.assertEqual(r["sequent"], "p -> q |- p -> ~~q")
            code, out, _ = run("check-proof", out_path)
            self.assertEqual(code, 0)
        code, out, _ = run("derive", "deduction", data("mp.json"), "--discharge", "p -> q")
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)["premises"], ["p"])

    def test_deduction_of_rejected_proof(self):
        code, _, _ = run("derive", "deduction", data("bad_step.json"), "--discharge", "p")
        self.assertEqual(code, 1)


class Algebras(unittest.TestCase):
    def test_eval(self):
        # Element 2 is the pair <1,0>; ~<1,0> = <0,1> is element 1.
        code, out, _ = run("eval", data("full_twist_2.json"), "~x", "-a", "x=2")
        self.assertEqual(code, 0)
        self.assertEqual(json.loads(out)["value"], 1)
        self.assertEqual(run("eval", data("full_twist_2.json"), "~x", "-a", "x=9")[0], 2)
        self.assertEqual(run("eval", data("full_twist_2.json"), "~x")[0], 2)

    def test_check_eq(self):
        code, out, _ = run("check-eq", data("full_twist_2.json"), "~~x = x")
        self.assertEqual(code, 0)
        self.assertTrue(json.loads(out)["passed"])
        code, out, _ = run("check-eq", data("full_twist_2.json"), "x /\\ ~x -> y = |x /\\ ~x -> y|")
        self.assertEqual(code, 1)
        r = json.loads(out)
        self.assertIn("witness", r)

    def test_check_quasi_equation(self):
        code, out, _ = run("check-eq", data("full_twist_2.json"), "y = |y|",
                           "--if", "x = |x|", "--if", "x -> y = |x -> y|")
        self.assertEqual(code, 0)

    def test_check_qn4(self):
        for method in ("--relational", "--equational"):
            code, out, _ = run("check-qn4", data("full_twist_2.json"), method)
            self.assertEqual(code, 0)
            r = json.loads(out)
            self.assertTrue(r["passed"])
            self.assertTrue(r["n4"])
        self.assertEqual(run("check-qn4", data("full_twist_2.json"), "--relational", "--equational")[0], 2)
        self.assertEqual(run("check-qn4", data("two_chain.json"))[0], 2)

    def test_constant_top_product_is_not_qn4(self):
        with tempfile.TemporaryDirectory() as tmp:
            code, out, _ = run("twist", "build", data("two_chain_top.json"), "--full", "--out", tmp)
            self.assertEqual(code, 0)
            path = os.path.join(tmp, "full_twist.json")
            code, out, _ = run("check-qn4", path)
            self.assertEqual(code, 1)
            self.assertIn("QN4e.2", json.loads(out)["violated"])
            code, out, _ = run("twist", "represent", path)
            self.assertEqual(code, 1)


class Twists(unittest.TestCase):
    def test_subalgebras(self):
        code, out, _ = run("twist", "build", data("two_chain.json"))
        self.assertEqual(code, 0)
        rs = records(out)
        self.assertEqual(rs[-1]["twists"], 4)
        self.assertEqual(len(rs), 5)
        code, out, _ = run("twist", "build", data("two_chain_top.json"), "--subalgebras")
        self.assertEqual(records(out)[0]["carrier"], [[0, 1], [1, 1]])

    def test_subalgebra_files(self):
        with tempfile.TemporaryDirectory() as tmp:
            code, out, _ = run("twist", "build", data("two_chain.json"), "--out", tmp)
            self.assertEqual(code, 0)
            self.assertIn("4 twist structures", out)
            self.assertEqual(len(os.listdir(tmp)), 4)

    def test_represent(self):
        with tempfile.TemporaryDirectory() as tmp:
            code, out, _ = run("twist", "represent", data("full_twist_2.json"), "--out", tmp)
            self.assertEqual(code, 0)
            self.assertIn("B(A) has 2 elements", out)
            with open(os.path.join(tmp, "base.json")) as f:
                self.assertEqual(json.load(f)["box"], [0, 1])

    def test_bound(self):
        self.assertEqual(run("twist", "build", data("two_chain.json"), "--bound", "2")[0], 2)


class Zoo(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.tmp = tempfile.mkdtemp()
        cls.zoo = os.path.join(cls.tmp, "zoo")
        code, out, _ = run("zoo", "build", "--base-size", "3", "--out", cls.zoo)
        assert code == 0, out
        cls.summary = json.loads(out)

    @classmethod
    def tearDownClass(cls):
        shutil.rmtree(cls.tmp)

    def test_layout(self):
        self.assertTrue(os.path.exists(os.path.join(self.zoo, "index.json")))
        self.assertEqual(self.summary["qn4"], self.summary["models"])

    def test_verify_passes_and_is_deterministic(self):
        code, first, _ = run("-j", "1", "zoo", "verify", self.zoo)
        self.assertEqual(code, 0)
        _, second, _ = run("-j", "3", "zoo", "verify", self.zoo)
        self.assertEqual(first, second)
        summaries = [r for r in records(first) if r.get("summary")]
        self.assertEqual(len(summaries), 8)
        self.assertTrue(all(s["passed"] for s in summaries))
        self.assertTrue(all("seconds" not in s for s in summaries))

    def test_timing(self):
        code, out, _ = run("--timing", "zoo", "verify", self.zoo, "--suite", "mp")
        self.assertEqual(code, 0)
        self.assertIn("seconds", records(out)[-1])

    def test_unknown_suite(self):
        self.assertEqual(run("zoo", "verify", self.zoo, "--suite", "everything")[0], 2)

    def test_missing_zoo(self):
        self.assertEqual(run("zoo", "verify", os.path.join(self.tmp, "absent"))[0], 2)

    def test_corrupted_model_fails_with_witness(self):
        bad = os.path.join(self.tmp, "bad")
        shutil.copytree(self.zoo, bad)
        model = os.path.join(bad, "models", "model_003.json")
        with open(model) as f:
            a = json.load(f)
        a["imp"][0][0] = (a["imp"][0][0] + 1) % a["size"]
        with open(model, "w") as f:
            json.dump(a, f)
        code, out, _ = run("zoo", "verify", bad, "--suite", "translation", "--suite", "qn4")
        self.assertEqual(code, 1)
        failed = [r for r in records(out) if r.get("passed") is False and not r.get("summary")]
        self.assertTrue(failed)
        for r in failed:
            self.assertTrue(os.path.exists(r["witness_file"]))
            self.assertIn("witness", r)


class Suites(unittest.TestCase):
    def test_suite_with_mutants(self):
        code, out, _ = run("suite", "mp", "--base-size", "3", "--mutants", "50", "--seed", "5")
        self.assertEqual(code, 0)
        rs = records(out)
        self.assertEqual(rs[-1]["suite"], "mutants")
        self.assertEqual(rs[-1]["checks"], 50)
        _, again, _ = run("suite", "mp", "--base-size", "3", "--mutants", "50", "--seed", "5")
        self.assertEqual(out, again)

    def test_catalog(self):
        code, out, _ = run("catalog")
        self.assertEqual(code, 0)
        names = [r["name"] for r in records(out)]
        self.assertIn("cong_or_neg_11", names)
        code, out, _ = run("catalog", "assoc_and_b")
        self.assertEqual(code, 0)
        self.assertIn("steps", json.loads(out))
        self.assertEqual(run("catalog", "nope")[0], 2)


if __name__ == "__main__":
    QN4, DATA = sys.argv[1], sys.argv[2]
    unittest.main(argv=[sys.argv[0], "-v"])

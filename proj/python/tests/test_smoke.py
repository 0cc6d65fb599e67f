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

import pytest

import qn4

TWO_CHAIN = {"size": 2, "meet": [[0, 0], [0, 1]], "join": [[0, 1], [1, 1]], "imp": [[1, 1], [0, 1]], "box": [0, 1]}

MP = {
    "premises": ["p", "p -> q"],
    "steps": [
        {"formula": "p", "rule": "premise"},
        {"formula": "p -> q", "rule": "premise"},
        {"formula": "q", "rule": "mp", "args": [1, 2]},
    ],
}


def test_parse():
    f = qn4.parse("p => q")
    assert str(f) == "(p -> q) /\\ (~q -> ~p)"
    assert f.variables() == ["p", "q"]
    assert f == qn4.parse(str(f))
    assert str(qn4.parse_extended("p => q")) == "p => q"
    with pytest.raises(qn4.ParseError):
        qn4.parse("p ->")


def test_proofs():
    assert qn4.check_proof(MP)["accepted"]
    d = qn4.deduction(MP, "p")
    assert d["premises"] == ["p -> q"]
    assert qn4.check_proof(d)["accepted"]
    bad = dict(MP, steps=MP["steps"][:2] + [{"formula": "r", "rule": "mp", "args": [1, 2]}])
    r = qn4.check_proof(bad)
    assert not r["accepted"] and r["failing_step"] == 3


def test_catalog():
    names = qn4.derivations()
    assert "cong_imp_neg_15" in names
    for name in names[:10]:
        assert qn4.check_proof(qn4.derivation(name))["accepted"]
    with pytest.raises(KeyError):
        qn4.derivation("nope")


def test_algebra():
    a = qn4.full_twist(TWO_CHAIN)
    assert a["size"] == 4
    assert qn4.is_qn4(a)["passed"]
    assert qn4.is_qn4(a, "equational")["passed"]
    assert qn4.is_n4(a)
    assert not qn4.is_quasi_nelson(a)
    assert qn4.eval(a, "~x", {"x": 2}) == 1
    r = qn4.check_equation(a, "x /\\ ~x -> y = |x /\\ ~x -> y|")
    assert not r["passed"] and "witness" in r
    rep = qn4.represent(a)
    assert rep["base"]["size"] == 2
    assert sorted(rep["iota"]) == [0, 1, 2, 3]


def test_constant_top_product():
    top = dict(TWO_CHAIN, box=[1, 1])
    rel = qn4.is_qn4(qn4.full_twist(top))
    assert not rel["passed"]
    assert "QN4e.2" in rel["violated"]
    subs = qn4.twist_subalgebras(top)
    assert [s["carrier"] for s in subs] == [[(0, 1), (1, 1)]]
    assert not qn4.is_n4(subs[0]["algebra"])


def test_zoo_and_suites():
    zoo = qn4.zoo(3)
    assert all(m["qn4"] for m in zoo["models"])
    keys = {qn4.canonical_key(m["algebra"]) for m in zoo["models"]}
    assert len(keys) == len(zoo["models"])
    assert "translation" in qn4.suite_names()
    out = qn4.run_suite("axioms", base_size=3)
    assert out["summary"]["passed"]
    assert out["summary"]["checks"] == len(out["records"])

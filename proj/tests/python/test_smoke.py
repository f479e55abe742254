import json

import _wittsuper as ws


def test_tau():
    assert ws.tau([], []) == 0
    assert ws.tau([2], [1]) == 1
    assert ws.tau([1, 3], [2, 4]) == 1


def test_mul_sign():
    xi1 = json.dumps([{"coeff": "1", "alpha": [0], "odd": [1]}])
    xi2 = json.dumps([{"coeff": "1", "alpha": [0], "odd": [2]}])
    prod = json.loads(ws.mul(xi2, xi1, 1, 2))
    assert prod == [{"coeff": "-1", "alpha": [0], "odd": [1, 2]}]
    assert json.loads(ws.mul(xi1, xi1, 1, 2)) == []


def test_bracket():
    d1 = json.dumps([{"coeff": "1", "alpha": [0], "odd": [], "dir": 1}])
    t1d1 = json.dumps([{"coeff": "1", "alpha": [1], "odd": [], "dir": 1}])
    out = json.loads(ws.bracket(d1, t1d1, 1, 0))
    assert out == [{"coeff": "1", "alpha": [0], "odd": [], "dir": 1}]


def test_apply_field():
    d1 = json.dumps([{"coeff": "1", "alpha": [0], "odd": [], "dir": 1}])
    t1sq = json.dumps([{"coeff": "1", "alpha": [2], "odd": []}])
    out = json.loads(ws.apply_field(d1, t1sq, 1, 0))
    assert out == [{"coeff": "2", "alpha": [1], "odd": []}]


def test_shadow():
    support = json.dumps(
        {
            "m": 2,
            "components": [
                {"base": ["1/2", "0"], "free": [[1, 0]], "plus": [[0, -1]]}
            ],
        }
    )
    sh = ws.shadow(support)
    assert sh["gamma_consistent"]
    assert sorted(sh["infinite"]) == [[-1, 0], [1, 0]]
    assert sorted(sh["plus"]) == [[-1, 1], [0, 1]]
    assert sh["finite"] == []


def test_levi():
    support = json.dumps(
        {
            "m": 3,
            "components": [
                {
                    "base": ["1/2", "1/3", "0"],
                    "free": [[1, 0, 0], [0, 1, 0]],
                    "plus": [[0, 0, -1]],
                }
            ],
        }
    )
    levi = ws.levi(support, 1)
    assert levi["q"] == 2
    assert levi["k_blocks"] == [[3]]


def test_classify():
    v = ws.classify("A", "trivial", 1, 1)
    assert v["case"] == 3
    assert not v["simple"]
    v2 = ws.classify("laurent(1/2)", "nonfund", 1, 1)
    assert v2["case"] == 1 and v2["simple"] and v2["hc"]
    v3 = ws.classify("A", "fund:A:1", 1, 1)
    assert v3["case"] == 2


def test_suites():
    names = ws.suite_names()
    assert "jacobi" in names and "pi" in names
    r = ws.run_suite("pi", m=1, n=1, deg=2)
    assert r["pass"]
    r2 = ws.run_suite("omegabar", q=1, n=1)
    assert r2["pass"]
    assert r2["metrics"]["r0.A-trivial"] == "1"

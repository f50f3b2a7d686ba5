import json

import pytest

import macjack


def test_first_j():
    assert macjack.expand("(1)", n_vars=2) == "(1-t)*m[1]"
    assert macjack.expand("(0)") == "1"


def test_jack_side():
    assert macjack.expand("(2)", n_vars=2, side="alpha") == "(1+alpha)*m[2] + (2)*m[1,1]"
    assert macjack.expand("(1,1)", n_vars=2, side="alpha", basis="P") == "m[1,1]"


def test_json_document():
    doc = macjack.expand_json("(2,1)", n_vars=3)
    assert doc["field"] == "qt"
    assert json.dumps(doc)


def test_latex():
    assert "m_{(2,1)}" in macjack.expand_latex("(2,1)", n_vars=3)


def test_bad_input():
    with pytest.raises(ValueError):
        macjack.expand("(1,2)")
    with pytest.raises(ValueError):
        macjack.expand("(1,1,1)", n_vars=2)


def test_norms_agree():
    rec, closed = macjack.norm_ratio("(2,1)", 3)
    assert rec == closed


def test_pieri_targets():
    targets = [mu for mu, _ in macjack.pieri("(2,2)", 2, 4)]
    assert sorted(targets) == sorted(["(3,3)", "(3,2,1)", "(2,2,1,1)"])


def test_small_suites_verify():
    for suite in ["garsia-tesler", "tilde-chain", "jack-chains"]:
        reports = macjack.verify(suite, n_max=2, deg_max=3)
        assert reports
        assert all(r["status"] == "verified" for r in reports), suite


def test_suite_names():
    names = macjack.suite_names()
    assert "worked-example" in names and "jack-bridge" in names

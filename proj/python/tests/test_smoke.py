import json

import pytest

import condind

PAIRS = [[0, 1], [2, 3]]
X = ["1", "3", "2", "6"]


def test_conventions():
    assert condind.ext_sub("inf", "inf") == "0"
    assert condind.ext_mul("0", "-inf") == "0"
    assert condind.ext_add("3/2", "1/2") == "2"


def test_essential_bounds():
    assert condind.esssup_cond(X, PAIRS) == ["3", "3", "6", "6"]
    assert condind.essinf_cond(["inf", "inf", "0", "1"], PAIRS) == ["inf", "inf", "0", "0"]


def test_extended_expectation():
    assert condind.cond_exp_extended(["inf", "-inf", "1", "1"], PAIRS) == ["0", "0", "1", "1"]
    assert condind.cond_exp_extended(X, PAIRS, probs=["1/8", "3/8", "1/4", "1/4"]) == ["5/2"] * 2 + ["4"] * 2


def test_named_indicators():
    assert condind.apply("mix:esssup", X, PAIRS) == ["2", "2", "4", "4"]
    rho0 = {"rho": ["1/2", "3/2", "1", "1"]}
    assert condind.apply("weighted:rho", ["2", "2", "0", "4"], PAIRS, variables=rho0) == ["2"] * 4


def test_risk():
    assert condind.rho("condexp", X, PAIRS) == ["-2", "-2", "-4", "-4"]
    assert condind.rho("esssup", X, PAIRS) == ["-3", "-3", "-6", "-6"]


def test_density_recovery():
    rho0 = ["1/2", "3/2", "1", "1"]
    out = condind.recover_density("weighted:rho", 4, PAIRS, variables={"rho": rho0})
    assert out["density"] == rho0
    assert out["reconstruction_ok"]
    with pytest.raises(condind.HypothesisFailed):
        condind.recover_density("esssup", 4, PAIRS)


def test_errors_map_to_value_error():
    with pytest.raises(ValueError):
        condind.esssup_cond(X, [[0, 1], [1, 2, 3]])
    with pytest.raises(ValueError):
        condind.apply("nope", X, PAIRS)


def test_dispatch():
    code, out = condind.dispatch(["apply", "--indicator", "esssup", "--sigma", "H", "--var", "X"])
    assert code == 0
    report = json.loads(out)
    assert list(report["result"]["value"].values()) == ["3", "3", "6", "6"]
    code, out = condind.dispatch(["frobnicate"])
    assert code == 2
    assert "unknown command" in out

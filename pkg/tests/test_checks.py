import json
import math
from fractions import Fraction

import pytest

import paritylab.specialfn as specialfn
from paritylab.checks import (
    CHECK_COMPARISONS,
    CheckResult,
    check_emf,
    check_lambda_identity,
    check_nr_expansion,
    check_sy_negativity,
    check_sy_taylor,
    default_suite,
    run_suite,
)

EXPECTED_SUITE = [
    "check_sy_negativity[N=2]",
    "check_sy_negativity[N=3]",
    "check_sy_negativity[N=4]",
    "check_sy_negativity[N=5]",
    "check_sy_negativity[N=6]",
    "check_sy_negativity[N=2,tail]",
    "check_sy_taylor[N=2]",
    "check_sy_taylor[N=3]",
    "check_sy_taylor[N=4]",
    "check_sy_taylor[N=5]",
    "check_sy_taylor[N=6]",
    "check_nr_expansion[A=0.0,R=0]",
    "check_nr_expansion[A=0.0,R=1]",
    "check_nr_expansion[A=0.0,R=2]",
    "check_nr_expansion[A=0.5,R=1]",
    "check_nr_expansion[A=0.5,R=2]",
    "check_emf",
    "check_lambda_identity",
]


def test_default_suite_names_and_order():
    assert [name for name, _ in default_suite()] == EXPECTED_SUITE


def test_run_suite_all_green():
    results = run_suite()
    assert [r.name for r in results] == EXPECTED_SUITE
    assert all(r.passed for r in results)


def test_run_suite_prefix_filter():
    only_emf = run_suite(only="check_emf")
    assert [r.name for r in only_emf] == ["check_emf"]
    taylor = run_suite(only="check_sy_taylor")
    assert len(taylor) == 5
    assert run_suite(only="does_not_exist") == []


def test_json_line_shape():
    line = CheckResult("demo", True, 0.5, 1.0, 3, "note").to_json_line()
    decoded = json.loads(line)
    assert list(decoded) == ["name", "passed", "observed", "bound", "samples", "notes"]
    assert decoded["passed"] is True
    assert decoded["observed"] == 0.5


def test_comparison_directions_registered():
    assert CHECK_COMPARISONS["check_sy_negativity"] == "greater"
    for family in ("check_sy_taylor", "check_nr_expansion", "check_emf",
                   "check_lambda_identity"):
        assert CHECK_COMPARISONS[family] == "leq"


# ---------------------------------------------------------------------------
# individual checks
# ---------------------------------------------------------------------------


def test_sy_negativity_details():
    res = check_sy_negativity(2)
    assert res.passed and res.observed > 0.0
    assert res.samples == 400  # 200 log-spaced points, both signs
    tail = check_sy_negativity(2, y_min=0.5)
    assert tail.name == "check_sy_negativity[N=2,tail]"
    assert tail.passed
    with pytest.raises(ValueError):
        check_sy_negativity(2, grid=[0.0, 1.0])
    with pytest.raises(ValueError):
        check_sy_negativity(2, grid=[1.0], y_min=5.0)


def test_sy_taylor_bound():
    res = check_sy_taylor(3)
    assert res.passed
    assert res.observed <= res.bound == 10.0


def test_nr_expansion_degenerate_r0():
    B = math.pi * math.sqrt(2.0 / 12.0)
    res = check_nr_expansion(0.0, B, [400], R=0)
    assert res.passed
    assert res.bound > 0.0  # 2 T_{A,B,0}


def test_nr_expansion_flags_fast_decay():
    B = math.pi * math.sqrt(2.0 / 12.0)
    res = check_nr_expansion(0.5, B, [400, 1600], R=2)
    assert res.passed
    assert "faster than the generic rate" in res.notes


def test_nr_expansion_validation():
    B = math.pi * math.sqrt(2.0 / 12.0)
    with pytest.raises(ValueError):
        check_nr_expansion(0.0, B, [1600, 400], R=1)
    with pytest.raises(ValueError):
        check_nr_expansion(0.0, B, [50, 400], R=1)


def test_emf_check_green():
    res = check_emf()
    assert res.passed
    assert res.observed <= 1e-8
    assert "gaussian" in res.notes


def test_lambda_identity_check():
    res = check_lambda_identity()
    assert res.passed
    assert res.observed <= 1e-10


# ---------------------------------------------------------------------------
# mutation sanity: a wrong Bernoulli number must be caught
# ---------------------------------------------------------------------------


def test_emf_check_catches_wrong_bernoulli(monkeypatch):
    real = specialfn.bernoulli_number

    def wrong(r):
        if r == 2:
            return Fraction(1, 5)
        return real(r)

    monkeypatch.setattr(specialfn, "bernoulli_number", wrong)
    res = check_emf()
    assert not res.passed
    assert res.observed > res.bound

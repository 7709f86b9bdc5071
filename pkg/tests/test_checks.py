"""Check registry: schema, suites, deterministic serialization."""

import json
from fractions import Fraction

import pytest

from conewalk import checks

SCHEMA_KEYS = {"check_id", "paper_ref", "status", "measured", "expected",
               "tolerance"}


def test_registry_is_complete():
    assert sorted(checks.CHECKS) == [f"AC{i:02d}" for i in range(1, 17)]
    assert sorted(checks.SUITES["all"]) == sorted(checks.CHECKS)
    for name, ids in checks.SUITES.items():
        assert set(ids) <= set(checks.CHECKS), name


def test_every_suite_name_is_a_module_tag():
    tags = {tag for tag, _ in checks.CHECKS.values()}
    assert tags <= set(checks.SUITES)


def test_unknown_selectors_raise():
    with pytest.raises(KeyError):
        checks.run_check("AC99")
    with pytest.raises(KeyError):
        checks.run_suite("nosuch")


def test_report_schema_and_determinism():
    rep1 = checks.run_check("AC04")
    assert set(rep1) == SCHEMA_KEYS
    assert rep1["status"] in ("pass", "fail")
    s1 = json.dumps(rep1, sort_keys=True)
    rep2 = checks.run_check("AC04")
    assert json.dumps(rep2, sort_keys=True) == s1


def test_suite_selector_accepts_single_check():
    reps = checks.run_suite("AC04")
    assert [r["check_id"] for r in reps] == ["AC04"]


def test_jsonable_handles_exact_values():
    blob = checks._jsonable({
        "frac": Fraction(3, 7),
        "tup": (1, 2),
        "set": {3, 1, 2},
        "nested": {(0, 1): Fraction(1, 2)},
    })
    assert json.loads(json.dumps(blob)) == {
        "frac": "3/7",
        "tup": [1, 2],
        "set": [1, 2, 3],
        "nested": {"(0, 1)": "1/2"},
    }

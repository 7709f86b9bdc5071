"""Trace functionals: normalization, harmonicity, frozen values."""

from fractions import Fraction

import pytest

from conewalk import traces
from conewalk.errors import InvalidArgumentError

SPECS = [
    traces.LowerDiscrete(0, 0),
    traces.LowerDiscrete(2, 3),
    traces.UpperDiscrete(2, 2),
    traces.Multiplicative(Fraction(1, 2)),
    traces.Multiplicative(Fraction(3, 10)),
]

NODES = [(0, 1, 0), (0, 0, 1), (0, 1, 1), (1, 1, 1), (0, 2, 1), (1, 2, 1),
         (2, 2, 2)]


@pytest.mark.parametrize("spec", SPECS, ids=str)
def test_normalization_is_one(spec):
    for m in range(9):
        assert traces.normalization(spec, m) == 1


@pytest.mark.parametrize("spec", SPECS, ids=str)
def test_harmonicity(spec):
    # Value at a node equals the sum of values at its two successors.
    for node in NODES:
        assert traces.harmonicity_residual(spec, node) == 0


def test_lower_point_mass_values():
    spec = traces.LowerDiscrete(0, 0)
    assert traces.eval_trace(spec, (0, 1, 0)) == 1
    assert traces.eval_trace(spec, (0, 0, 1)) == 0
    assert traces.eval_trace(spec, (0, 1, 1)) == 0


def test_h_ray_limit_values():
    spec = traces.LowerDiscrete(2, 20)
    assert traces.eval_trace(spec, (0, 0, 1)) == 1
    assert traces.eval_trace(spec, (0, 1, 0)) == 0


def test_multiplicative_values():
    spec = traces.Multiplicative(Fraction(1, 2))
    assert traces.eval_trace(spec, (1, 1, 1)) == Fraction(1, 4)
    assert traces.eval_trace(spec, (0, 1, 0)) == Fraction(1, 2)
    assert traces.eval_trace(spec, (0, 0, 0)) == 1


def test_values_are_probabilities():
    for spec in SPECS:
        for node in NODES:
            v = traces.eval_trace(spec, node)
            assert 0 <= v <= 1
            assert isinstance(v, Fraction)


def test_faithful_normalization():
    for k in range(1, 7):
        assert traces.faithful_normalization(
            Fraction(1, 3), Fraction(1, 4), k) == 1


def test_faithful_eval_positive_everywhere():
    # Faithfulness: strictly positive mass at every node of small levels.
    x, y = Fraction(1, 3), Fraction(1, 4)
    for node in NODES:
        r, a, b = node
        assert traces.faithful_eval(x, y, node, a + b) > 0


def test_limit_table_errors_shrink():
    rows = traces.limit_table([(100, 10), (400, 20), (900, 30)])
    errs = [row["sup_error"] for row in rows]
    assert errs == sorted(errs, reverse=True)
    assert all(e >= 0 for e in errs)


def test_eval_trace_rejects_bad_node():
    with pytest.raises(InvalidArgumentError):
        traces.eval_trace(traces.LowerDiscrete(0, 0), (0, -1, 0))

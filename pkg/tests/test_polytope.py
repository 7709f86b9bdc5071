"""Rational polytopes: gauges against closed-form norms, solidity checks."""

import pytest
from hypothesis import given, settings, strategies as st

from conewalk import groups, growth, polytope
from conewalk.errors import InvalidArgumentError

OCTAHEDRON = polytope.LatticePolytope.hull(
    [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)])
CUBE = polytope.LatticePolytope.hull(
    [(sx, sy, sz) for sx in (-1, 1) for sy in (-1, 1) for sz in (-1, 1)])

coord = st.integers(min_value=-12, max_value=12)
point = st.tuples(coord, coord, coord)


@settings(deadline=None, derandomize=True, max_examples=80)
@given(point)
def test_octahedron_gauge_is_l1(p):
    assert OCTAHEDRON.gauge(p) == sum(abs(c) for c in p)


@settings(deadline=None, derandomize=True, max_examples=80)
@given(point)
def test_cube_gauge_is_linf(p):
    assert CUBE.gauge(p) == max(abs(c) for c in p)


@settings(deadline=None, derandomize=True, max_examples=60)
@given(point, point)
def test_gauge_subadditive(p, q):
    s = tuple(a + b for a, b in zip(p, q))
    for poly in (OCTAHEDRON, CUBE):
        assert poly.gauge(s) <= poly.gauge(p) + poly.gauge(q)


@settings(deadline=None, derandomize=True, max_examples=60)
@given(point, st.integers(min_value=0, max_value=5))
def test_gauge_positively_homogeneous(p, n):
    q = tuple(n * c for c in p)
    assert OCTAHEDRON.gauge(q) == n * OCTAHEDRON.gauge(p)


def test_contains_iff_gauge_at_most_one():
    pts = [(0, 0, 0), (1, 0, 0), (1, 1, 0), (-1, 1, 1), (2, 0, 0)]
    for poly in (OCTAHEDRON, CUBE):
        for p in pts:
            assert poly.contains(p) == (poly.gauge(p) <= 1)


def test_lattice_points_of_octahedron():
    pts = set(OCTAHEDRON.lattice_points())
    assert pts == {(0, 0, 0), (1, 0, 0), (-1, 0, 0), (0, 1, 0),
                   (0, -1, 0), (0, 0, 1), (0, 0, -1)}


def test_right_simplex_2_3_7():
    spec = polytope.right_simplex((2, 3, 7))
    assert spec.unique_interior
    assert spec.interior_points == ((1, 1, 1),)
    assert spec.has_interior_point
    rep = polytope.a17_check(spec.support)
    assert rep["pass"], rep


def test_right_simplex_without_unique_interior():
    # (2, 2, 2): the interior of conv{0, 2e1, 2e2, 2e3} holds no lattice
    # point at all.
    spec = polytope.right_simplex((2, 2, 2))
    assert not spec.has_interior_point
    assert spec.interior_points == ()


def test_degenerate_inputs_are_rejected():
    flat = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (-1, 0, 0), (0, -1, 0),
            (1, 1, 0), (-1, -1, 0)]
    with pytest.raises(InvalidArgumentError):
        polytope.a17_check(flat)
    with pytest.raises(InvalidArgumentError):
        polytope.gauge_vs_wordlength(flat, 2)


OCT_SUPPORT = [(0, 0, 0), (1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0),
               (0, 0, 1), (0, 0, -1)]


def test_gauge_vs_wordlength_octahedron_walk():
    # For the octahedral walk on Z^3 the gauge of hull(S) is the L1 norm,
    # which equals the word length exactly.
    rep = polytope.gauge_vs_wordlength(OCT_SUPPORT, 4)
    assert rep["checked"] > 0
    assert rep["max_gap"] == 0


def test_fekete_converges_on_an_easy_direction():
    desc = groups.free_abelian(3)
    aset = growth.AdmissibleSet.make(desc, OCT_SUPPORT)
    ball = growth.PackedLatticeBall(aset, 30)
    poly = polytope.LatticePolytope.hull(OCT_SUPPORT)
    rep = polytope.fekete(ball, poly, (0, 1, 0), 25)
    assert rep["status"] == "complete"
    assert rep["final_gap"] == 0
    assert rep["gauge"] == 1
    # l(x^n)/n equals the gauge at every n for this walk.
    assert all(length == n for n, length, _ in rep["seq"])


def test_hull_rejects_empty():
    with pytest.raises(InvalidArgumentError):
        polytope.LatticePolytope.hull([])

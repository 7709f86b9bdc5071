"""Group layer: multiplication laws against independent oracles."""

import pytest
from hypothesis import given, settings, strategies as st

from conewalk import groups
from conewalk.errors import InvalidArgumentError

HEIS = groups.heisenberg()
F2 = groups.free_group_2()

small_int = st.integers(min_value=-8, max_value=8)
heis_elem = st.tuples(small_int, small_int, small_int)


def heis_matrix(x):
    """Unitriangular image of (r, a, b); matrix product is the oracle."""
    r, a, b = x
    return ((1, b, r), (0, 1, a), (0, 0, 1))


def mat_mul(p, q):
    return tuple(
        tuple(sum(p[i][k] * q[k][j] for k in range(3)) for j in range(3))
        for i in range(3))


@settings(deadline=None, derandomize=True)
@given(heis_elem, heis_elem)
def test_heis_mul_matches_matrix_model(x, y):
    assert heis_matrix(groups.mul(HEIS, x, y)) == \
        mat_mul(heis_matrix(x), heis_matrix(y))


@settings(deadline=None, derandomize=True)
@given(heis_elem)
def test_heis_inverse(x):
    e = groups.identity(HEIS)
    assert groups.mul(HEIS, x, groups.inv(HEIS, x)) == e
    assert groups.mul(HEIS, groups.inv(HEIS, x), x) == e


@settings(deadline=None, derandomize=True)
@given(heis_elem, st.integers(min_value=-6, max_value=6))
def test_heis_power(x, n):
    acc = groups.identity(HEIS)
    step = x if n >= 0 else groups.inv(HEIS, x)
    for _ in range(abs(n)):
        acc = groups.mul(HEIS, acc, step)
    assert groups.power(HEIS, x, n) == acc


def test_heis_central_element_commutes():
    z = groups.HEIS_Z
    for x in [(0, 1, 0), (0, 0, 1), (2, 3, -4)]:
        assert groups.mul(HEIS, z, x) == groups.mul(HEIS, x, z)


def naive_reduce(word):
    """Quadratic scan-and-cancel reference."""
    out = list(word)
    changed = True
    while changed:
        changed = False
        for i in range(len(out) - 1):
            if out[i] != out[i + 1] and out[i].lower() == out[i + 1].lower():
                del out[i:i + 2]
                changed = True
                break
    return "".join(out)


word_strat = st.text(alphabet="gGhH", max_size=12)


@settings(deadline=None, derandomize=True)
@given(word_strat)
def test_reduce_word_matches_naive(w):
    assert groups.reduce_word(w) == naive_reduce(w)


@settings(deadline=None, derandomize=True)
@given(word_strat, word_strat, word_strat)
def test_free_group_associative(u, v, w):
    u, v, w = (groups.reduce_word(x) for x in (u, v, w))
    left = groups.mul(F2, groups.mul(F2, u, v), w)
    right = groups.mul(F2, u, groups.mul(F2, v, w))
    assert left == right


@settings(deadline=None, derandomize=True)
@given(word_strat)
def test_free_group_inverse(w):
    w = groups.reduce_word(w)
    assert groups.mul(F2, w, groups.inv(F2, w)) == ""


def test_d4_maps_are_automorphisms():
    samples = [(0, 1, 0), (0, 0, 1), (1, 0, 0), (2, 3, 1), (-1, 2, -2)]
    for sym in groups.D4_ALL:
        for x in samples:
            for y in samples:
                assert groups.d4_apply(sym, groups.mul(HEIS, x, y)) == \
                    groups.mul(HEIS, groups.d4_apply(sym, x),
                               groups.d4_apply(sym, y))


def test_d4_compose_and_inverse():
    t = (3, 1, 2)
    for a in groups.D4_ALL:
        for b in groups.D4_ALL:
            assert groups.d4_apply(groups.d4_compose(a, b), t) == \
                groups.d4_apply(a, groups.d4_apply(b, t))
        inv = groups.d4_inverse(a)
        assert groups.d4_apply(groups.d4_compose(inv, a), t) == t


def test_d4_preserves_standard_support():
    supp = set(groups.heis_standard_support())
    for sym in groups.D4_ALL:
        assert {groups.d4_apply(sym, s) for s in supp} == supp


def test_cyclic_table_laws():
    table = groups.cyclic_table(5)
    assert table.n == 5
    for i in range(5):
        for j in range(5):
            assert table.mul(i, j) == (i + j) % 5
        assert table.mul(i, table.inv(i)) == 0


def test_symmetric3_table_orders():
    table = groups.symmetric3_table()
    assert table.n == 6
    orders = []
    for i in range(6):
        k, acc = 1, i
        while acc != 0:
            acc = table.mul(acc, i)
            k += 1
        orders.append(k)
    assert sorted(orders) == [1, 2, 2, 2, 3, 3]


def test_z_times_finite_law():
    desc = groups.z_times_finite(groups.cyclic_table(3))
    x, y = (2, 1), (-1, 2)
    assert groups.mul(desc, x, y) == (1, 0)
    assert groups.mul(desc, x, groups.inv(desc, x)) == (0, 0)


def test_canonical_and_sort_keys():
    assert groups.canonical_key(HEIS, (1, -2, 3)) == "1,-2,3"
    words = ["", "g", "G", "hg", "ggg"]
    assert sorted(words, key=lambda w: groups.sort_key(F2, w)) == \
        ["", "G", "g", "hg", "ggg"]


def test_validate_rejects_bad_elements():
    with pytest.raises(InvalidArgumentError):
        groups.validate(HEIS, (1, 2))
    with pytest.raises(InvalidArgumentError):
        groups.validate(F2, "gx")

"""Ball growth engines against a brute-force BFS reference."""

import pytest
from hypothesis import given, settings, strategies as st

from conewalk import groups, growth
from conewalk.errors import InvalidArgumentError, ResourceCapError
from conftest import brute_force_levels

HEIS = groups.heisenberg()
STANDARD = groups.heis_standard_support()

# |S^m| for the standard Heisenberg support, frozen from the BFS reference.
HEIS_SIZES = [1, 5, 17, 53, 135, 299, 593]


def _heis_mul(x, y):
    return groups.mul(HEIS, x, y)


@pytest.fixture(scope="module")
def reference_levels():
    return brute_force_levels(_heis_mul, (0, 0, 0), STANDARD, 6)


@pytest.fixture(scope="module")
def dict_ball():
    aset = growth.AdmissibleSet.make(HEIS, STANDARD)
    return growth.grow(aset, 6, engine="dict")


def test_sizes_match_reference(reference_levels, dict_ball):
    for m in range(7):
        assert len(reference_levels[m]) == HEIS_SIZES[m]
        assert dict_ball.support_size(m) == HEIS_SIZES[m]


def test_membership_matches_reference(reference_levels, dict_ball):
    for m in range(7):
        for x in reference_levels[m]:
            assert dict_ball.contains(x, m)
        assert sum(1 for x in reference_levels[6]
                   if dict_ball.contains(x, m)) == HEIS_SIZES[m]


def test_packed_engine_agrees_with_dict(dict_ball):
    aset = growth.AdmissibleSet.make(HEIS, STANDARD)
    packed = growth.grow(aset, 6, engine="packed")
    for m in range(7):
        assert packed.support_size(m) == dict_ball.support_size(m)
        assert set(packed.gamma(m)) == set(dict_ball.gamma(m))
    for x in [(0, 0, 0), (1, 0, 0), (2, 1, 1), (-3, 0, 2), (9, 9, 9)]:
        for m in range(7):
            assert packed.contains(x, m) == dict_ball.contains(x, m)


def test_word_length(dict_ball):
    assert dict_ball.word_length((0, 0, 0)) == 0
    assert dict_ball.word_length((0, 1, 0)) == 1
    assert dict_ball.word_length((1, 0, 0)) == 4
    assert dict_ball.word_length((99, 0, 0)) is None


def test_central_elements_are_dead_ends(dict_ball):
    # z and z^-1 sit at level 4 and no generator step leaves the 4-ball.
    assert dict_ball.dead_ends(4) == {(1, 0, 0), (-1, 0, 0)}
    assert dict_ball.dead_ends(1) == set()


def test_translate_subset_definition(dict_ball, reference_levels):
    # S^m x <= S^{m+k} checked elementwise is the defining statement.
    for x, k in [((1, 0, 0), 2), ((0, 1, 0), 1), ((1, 1, 1), 3)]:
        for m in range(1, 4):
            expected = all(
                _heis_mul(s, x) in reference_levels[m + k]
                for s in reference_levels[m])
            ok, witness = dict_ball.translate_subset(x, m, k)
            assert ok == expected
            if not ok:
                # The witness is a concrete failing translate.
                assert _heis_mul(witness, x) not in reference_levels[m + k]


@settings(deadline=None, derandomize=True, max_examples=40)
@given(st.sampled_from([(1, 0, 0), (-1, 0, 0), (0, 1, 1), (1, 1, 0),
                        (2, 1, 1), (0, 2, 0), (-2, 0, 1)]),
       st.integers(min_value=1, max_value=3),
       st.integers(min_value=1, max_value=2))
def test_witness_monotone_in_m(heis_ball_12, x, m, k):
    # Once a translate inclusion holds at m it holds at every larger m.
    if heis_ball_12.translate_subset(x, m, k)[0]:
        assert heis_ball_12.translate_subset(x, m + 1, k)[0]
        assert heis_ball_12.translate_subset(x, m + 2, k)[0]


@pytest.fixture(scope="module")
def heis_ball_12():
    aset = growth.AdmissibleSet.make(HEIS, STANDARD)
    return growth.grow(aset, 12)


def test_tilde_l_upper_witnessed(heis_ball_12):
    bound = growth.tilde_l_upper(heis_ball_12, (1, 0, 0), 4)
    assert bound.status == growth.WITNESSED
    assert bound.k == 2
    # One check at m = horizon - k decides k; the witness level obeys it.
    assert bound.witness_m + bound.k <= heis_ball_12.M


def test_tilde_l_upper_identity(heis_ball_12):
    bound = growth.tilde_l_upper(heis_ball_12, (0, 0, 0), 2)
    assert bound.k == 0
    assert bound.status == growth.WITNESSED


def test_census_with_exact_oracle(heis_ball_12):
    from conewalk import heis
    count, status = growth.census(
        heis_ball_12, 1, lambda x: heis.tilde_l_exact(*x))
    assert status == "exact"
    # ~l <= 1 holds exactly for the identity and the four generators.
    assert count == 5


def test_ratio_stats(dict_ball):
    ratios = growth.ratio_stats(dict_ball, 2)
    from fractions import Fraction
    assert ratios[0] == Fraction(HEIS_SIZES[2], HEIS_SIZES[0])
    assert all(q > 0 for q in ratios)


def test_element_cap_enforced():
    aset = growth.AdmissibleSet.make(HEIS, STANDARD)
    with pytest.raises(ResourceCapError):
        growth.grow(aset, 6, element_cap=10, engine="dict")
    with pytest.raises(ResourceCapError):
        growth.grow(aset, 20, element_cap=10, engine="packed")


def test_grow_rejects_bad_args():
    aset = growth.AdmissibleSet.make(HEIS, STANDARD)
    with pytest.raises(InvalidArgumentError):
        growth.grow(aset, -1)
    with pytest.raises(InvalidArgumentError):
        growth.grow(aset, 3, engine="nosuch")
    quad = growth.AdmissibleSet.make(HEIS, groups.heis_quadrant_support())
    with pytest.raises(InvalidArgumentError):
        growth.grow(quad, 3, engine="packed")


def test_z_example_weight_drop():
    # Walk on Z with steps {4, 3, 1, 0, -1}: the element 2 is not a product
    # of one step, yet one extra radius absorbs its translates for good.
    desc = groups.free_abelian(1)
    aset = growth.AdmissibleSet.make(desc, [(4,), (3,), (1,), (0,), (-1,)])
    ball = growth.grow(aset, 40)
    assert ball.word_length((2,)) == 2
    bound = growth.tilde_l_upper(ball, (2,), 3)
    assert bound.k == 1
    assert bound.status == growth.WITNESSED

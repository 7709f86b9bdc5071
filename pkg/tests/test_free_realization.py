"""0-1 matrix realization inside the rank-2 free group."""

import pytest

from conewalk import free_realization, groups
from conewalk.errors import InvalidArgumentError

F2 = groups.free_group_2()

ALL_ONES = [[1, 1], [1, 1]]
PRIMITIVE_3 = [[0, 1, 0], [0, 0, 1], [1, 0, 1]]


def test_frozen_words_all_ones():
    spec = free_realization.build(ALL_ONES)
    assert spec.v_words == ("g", "h")
    assert spec.w_words == (("g", "h"), ("ggH", "hgH"))
    assert spec.support_sorted() == \
        ("", "G", "H", "g", "h", "ggH", "hGG", "hGH", "hgH")
    assert spec.primitivity_exponent == 1


def test_degree_is_a_homomorphism():
    for u in ["", "g", "Gh", "ggH", "hGG"]:
        for v in ["h", "gg", "HG"]:
            prod = groups.mul(F2, u, v)
            assert free_realization.degree(prod) == \
                free_realization.degree(u) + free_realization.degree(v)


def test_letters_have_degree_one():
    for spec in (free_realization.build(ALL_ONES),
                 free_realization.build(PRIMITIVE_3)):
        k = spec.k
        for i in range(k):
            for j in range(k):
                if spec.matrix[i][j]:
                    assert free_realization.degree(spec.w_words[i][j]) == 1


def test_w_words_connect_the_rays():
    # w_ij carries v_i g^{n-1} to v_j g^n.
    spec = free_realization.build(PRIMITIVE_3)
    for i in range(3):
        for j in range(3):
            src = groups.mul(F2, spec.v_words[i], "g" * 3)
            dst = groups.mul(F2, spec.v_words[j], "g" * 4)
            assert groups.mul(F2, spec.w_words[i][j], src) == dst


@pytest.mark.parametrize("B,depth", [(ALL_ONES, 5), (PRIMITIVE_3, 4)])
def test_transition_matrix_recovered(B, depth):
    spec = free_realization.build(B)
    ball = free_realization.grow_ball(spec, depth + 1)
    for n in range(1, depth + 1):
        matches, matrix = free_realization.check_transition(spec, n, ball)
        assert matches, (n, matrix)
        assert [list(r) for r in matrix] == [list(r) for r in B]


@pytest.mark.parametrize("B", [ALL_ONES, PRIMITIVE_3])
def test_isolation(B):
    spec = free_realization.build(B)
    ball = free_realization.grow_ball(spec, 5)
    for n in range(1, 5):
        assert free_realization.check_isolation(spec, n, ball)


@pytest.mark.parametrize("B", [ALL_ONES, PRIMITIVE_3])
def test_degree_slice_equals_w_products(B):
    # Level-n elements of degree n are exactly the products of n letters.
    spec = free_realization.build(B)
    ball = free_realization.grow_ball(spec, 5)
    for n in range(5):
        assert free_realization.degree_slice(ball, n) == \
            free_realization.w_products(spec, n)


def test_all_ones_nodes_appear_at_their_level():
    spec = free_realization.build(ALL_ONES)
    ball = free_realization.grow_ball(spec, 5)
    for n in range(1, 5):
        assert free_realization.node_first_levels(spec, ball, n) == (n, n)


def test_primitive_3_first_levels_frozen():
    # Rows of B lacking the first-row pattern delay the nodes; the frozen
    # profile records where each ray node first enters the ball.
    spec = free_realization.build(PRIMITIVE_3)
    ball = free_realization.grow_ball(spec, 6)
    got = [free_realization.node_first_levels(spec, ball, n)
           for n in range(1, 6)]
    assert got == [(3, 1, 3), (4, 4, 2), (3, 5, 3), (4, 4, 4), (5, 5, 5)]
    # Never earlier than the defining level.
    for n, levels in enumerate(got, start=1):
        assert all(lv >= n for lv in levels)


def test_gamma_b_nodes():
    spec = free_realization.build(ALL_ONES)
    ball = free_realization.grow_ball(spec, 4)
    nodes = free_realization.gamma_b(spec, 3, ball)
    assert len(nodes) == 2
    assert all(free_realization.degree(w) == 3 for w in nodes)


def test_primitivity_exponent_3x3():
    spec = free_realization.build(PRIMITIVE_3)
    assert spec.primitivity_exponent == 4


def test_admissibility_evidence():
    spec = free_realization.build(ALL_ONES)
    ev = free_realization.admissibility_evidence(spec)
    assert all(j is not None for j in ev.values())


def test_rejections():
    with pytest.raises(InvalidArgumentError):
        free_realization.build([[1]])
    with pytest.raises(InvalidArgumentError):
        free_realization.build([[1, 0], [0, 1]])  # not primitive
    with pytest.raises(InvalidArgumentError):
        free_realization.build([[1, 2], [1, 1]])  # not 0/1
    with pytest.raises(InvalidArgumentError):
        free_realization.build([[1, 1, 1], [1, 1, 1]])  # not square
    with pytest.raises(InvalidArgumentError):
        free_realization.build([[0, 1], [0, 1]])  # not primitive (column)

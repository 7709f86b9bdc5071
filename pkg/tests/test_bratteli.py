"""Layered diagram construction, antecedents, path counts, trace paths."""

import pytest

from conewalk import bratteli, groups, growth, heis, partitions, traces
from conewalk.errors import InvalidArgumentError

HEIS = groups.heisenberg()


@pytest.fixture(scope="module")
def diagram(quadrant_ball_8):
    coeffs = {(0, 1, 0): 1, (0, 0, 1): 1}
    return bratteli.BratteliDiagram.from_growth(quadrant_ball_8, coeffs, 8)


def test_levels_match_quadrant_walk(diagram):
    levels = heis.quadrant_levels(8)
    for m in range(9):
        assert set(diagram.levels[m]) == set(levels[m])


def test_edges_are_left_multiplications(diagram):
    for m in range(diagram.depth):
        for src, outs in diagram.out_edges[m].items():
            expected = {groups.mul(HEIS, s, src)
                        for s in [(0, 1, 0), (0, 0, 1)]}
            assert set(outs) == expected
            assert all(mult == 1 for mult in outs.values())


def test_path_count_equals_partition_count(diagram):
    # Paths from the root to (r, a, b) at level a+b are in bijection with
    # partitions of r in an a x b box.
    root = (0, 0, 0)
    for m in range(9):
        for node in diagram.levels[m]:
            r, a, b = node
            assert diagram.path_count(root, 0, node, m) == \
                partitions.p3(r, a, b)


def test_antecedent_set_of_generator_powers(diagram):
    # w = g^m reaches back to the single node g^{m-k} at depth k.
    for m in range(1, 9):
        for k in range(1, m + 1):
            assert diagram.antecedent_set((0, m, 0), m, k) == \
                {(0, m - k, 0)}


def test_antecedent_set_depth_validation(diagram):
    with pytest.raises(InvalidArgumentError):
        diagram.antecedent_set((0, 2, 0), 2, 3)
    with pytest.raises(InvalidArgumentError):
        diagram.antecedent_set((0, 2, 0), 2, -1)


def test_antecedent_full_criterion_matches_enumeration(diagram):
    for m in range(2, 7):
        level = heis.parabola_level(m)
        for node in level:
            for k in range(1, m):
                full = diagram.antecedent_set(node, m, k) == \
                    heis.parabola_level(m - k)
                assert full == heis.antecedent_full_criterion(node, m - k), \
                    (node, m, k)


def test_unique_antecedent_closed_form(diagram):
    # Exactly one immediate antecedent iff r < a or r > (a-1)(m-a).
    for m in range(1, 9):
        for node in diagram.levels[m]:
            r, a, b = node
            expected = r < a or r > (a - 1) * (m - a)
            assert (len(diagram.antecedent_set(node, m, 1)) == 1) == expected


def test_trace_paths_starts(diagram):
    paths = bratteli.trace_paths(diagram, bratteli.heis_ray_certifier)
    starts = {(p.start_level, p.start) for p in paths}
    expected = {(0, (0, 0, 0))}
    for r in range(2, 6):
        for b in range(2, 6):
            if r + b <= 7:
                expected.add((r + b, (r, r, b)))
    for c in range(2, 6):
        for d in range(2, 6):
            if c + d <= 7:
                expected.add((c + d, ((c - 1) * d, c, d)))
    assert starts == expected
    assert all(p.status == bratteli.CERTIFIED for p in paths)


def test_discrete_trace_harmonicity(diagram):
    paths = bratteli.trace_paths(diagram, bratteli.heis_ray_certifier)
    for path in paths[:6]:
        for m in range(path.start_level, 7):
            for node in diagram.levels[m]:
                v = bratteli.discrete_trace_eval(diagram, path, node, m)
                succ = sum(
                    mult * bratteli.discrete_trace_eval(
                        diagram, path, dst, m + 1)
                    for dst, mult in
                    diagram.out_edges[m].get(node, {}).items())
                assert v == succ
                assert 0 <= v <= 1


def test_discrete_trace_matches_lower_spec(diagram):
    # A path climbing the g-ray from the root evaluates like the
    # point-mass weight system at (0, 0).
    paths = bratteli.trace_paths(diagram, bratteli.heis_ray_certifier)
    g_ray = [p for p in paths
             if p.start_level == 0 and
             all(n == (0, lv, 0) for lv, n in enumerate(p.nodes))]
    assert g_ray
    spec = traces.LowerDiscrete(0, 0)
    path = g_ray[0]
    for node in [(0, 1, 0), (0, 0, 1), (0, 2, 0), (1, 1, 1)]:
        r, a, b = node
        assert bratteli.discrete_trace_eval(diagram, path, node, a + b) == \
            traces.eval_trace(spec, node)

import pytest

from conewalk import groups, growth


@pytest.fixture(scope="session")
def heis_ball_9():
    desc = groups.heisenberg()
    aset = growth.AdmissibleSet.make(desc, groups.heis_standard_support())
    return growth.grow(aset, 9)


@pytest.fixture(scope="session")
def quadrant_ball_8():
    desc = groups.heisenberg()
    aset = growth.AdmissibleSet.make(desc, groups.heis_quadrant_support())
    return growth.grow(aset, 8)


def brute_force_levels(mul, identity, support, depth):
    """BFS reference for supp f^0..supp f^depth, independent of growth.py."""
    levels = [{identity}]
    for _ in range(depth):
        prev = levels[-1]
        levels.append({mul(s, x) for s in support for x in prev})
    return levels

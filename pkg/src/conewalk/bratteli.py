"""Layered multigraph of walk supports and its backward-unique rays.

Level m holds supp f^m; an edge [w, m] -> [sw, m+1] per support element s,
weighted by the coefficient of s.  A trace path is a maximal chain whose
every node after its start has a unique antecedent; within a finite horizon
each such chain is found by walking backward from a top-level node with a
unique antecedent until the uniqueness first fails.

Paths are labelled "horizon-limited" unless a caller-supplied certifier
recognizes the tail as one that provably stays backward-unique forever.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import groups
from .errors import InvalidArgumentError


class BratteliDiagram:
    def __init__(self, levels, in_edges, out_edges, desc):
        self.levels = levels          # list of sorted node lists
        self.in_edges = in_edges      # [m][node] -> {src: mult}, m >= 1
        self.out_edges = out_edges    # [m][node] -> {dst: mult}
        self.desc = desc

    @property
    def depth(self) -> int:
        return len(self.levels) - 1

    @classmethod
    def from_growth(cls, ball, coeffs: dict, depth: int) -> "BratteliDiagram":
        """Build levels supp f^0..depth from a grown ball and the support
        coefficients of f (element -> multiplicity)."""
        if depth > ball.M:
            raise InvalidArgumentError("depth exceeds the ball horizon")
        desc = ball.desc
        levels = [sorted(ball.support(m)) for m in range(depth + 1)]
        sets = [set(lv) for lv in levels]
        in_edges = [dict() for _ in range(depth + 1)]
        out_edges = [dict() for _ in range(depth + 1)]
        for m in range(depth):
            for w in levels[m]:
                for s, c in coeffs.items():
                    t = groups.mul(desc, s, w)
                    if t not in sets[m + 1]:
                        continue
                    out_edges[m].setdefault(w, {})
                    out_edges[m][w][t] = out_edges[m][w].get(t, 0) + c
                    in_edges[m + 1].setdefault(t, {})
                    in_edges[m + 1][t][w] = in_edges[m + 1][t].get(w, 0) + c
        return cls(levels, in_edges, out_edges, desc)

    def _check_level(self, m: int):
        if not 0 <= m <= self.depth:
            raise InvalidArgumentError(f"level {m} outside diagram depth")

    def in_sources(self, m: int, node) -> dict:
        self._check_level(m)
        if m == 0:
            return {}
        return self.in_edges[m].get(node, {})

    def unique_antecedent(self, m: int, node) -> bool:
        return len(self.in_sources(m, node)) == 1

    def unique_antecedent_nodes(self, m: int) -> set:
        self._check_level(m)
        return {v for v in self.levels[m] if self.unique_antecedent(m, v)}

    def antecedent_set(self, node, m: int, k: int) -> frozenset:
        """All level-(m-k) nodes from which node at level m is reachable."""
        self._check_level(m)
        if not 0 <= k <= m:
            raise InvalidArgumentError("need 0 <= k <= m")
        if node not in set(self.levels[m]):
            raise InvalidArgumentError(f"{node} not at level {m}")
        frontier = {node}
        for lv in range(m, m - k, -1):
            frontier = {src for v in frontier
                        for src in self.in_edges[lv].get(v, {})}
        return frozenset(frontier)

    def path_count(self, src, src_level: int, dst, dst_level: int) -> int:
        """Number of weighted chains src -> dst (product of multiplicities
        summed over routes)."""
        self._check_level(src_level)
        self._check_level(dst_level)
        if dst_level < src_level:
            return 0
        counts = {src: 1}
        for m in range(src_level, dst_level):
            nxt: dict = {}
            for v, c in counts.items():
                for t, mult in self.out_edges[m].get(v, {}).items():
                    nxt[t] = nxt.get(t, 0) + c * mult
            counts = nxt
        return counts.get(dst, 0)


@dataclass(frozen=True)
class TracePath:
    """Backward-unique chain; nodes[i] sits at level start_level + i."""

    start_level: int
    nodes: tuple
    mults: tuple
    status: str  # "horizon-limited" or "criterion-certified"

    @property
    def start(self):
        return self.nodes[0]

    @property
    def top_level(self) -> int:
        return self.start_level + len(self.nodes) - 1


HORIZON = "horizon-limited"
CERTIFIED = "criterion-certified"


def trace_paths(diagram: BratteliDiagram, certifier=None) -> list[TracePath]:
    """All maximal backward-unique chains reaching the top level.

    Walk back from each top node with a unique antecedent; the start is the
    first node where uniqueness fails (or the root).  Distinct top nodes
    give distinct chains because the backward step is deterministic.
    """
    top = diagram.depth
    out = []
    for node in diagram.levels[top]:
        if not diagram.unique_antecedent(top, node):
            continue
        chain, mults = [node], []
        cur, lvl = node, top
        while lvl > 0 and diagram.unique_antecedent(lvl, cur):
            (src, c), = diagram.in_sources(lvl, cur).items()
            chain.append(src)
            mults.append(c)
            cur, lvl = src, lvl - 1
        nodes = tuple(reversed(chain))
        status = CERTIFIED if certifier is not None and certifier(nodes) \
            else HORIZON
        out.append(TracePath(lvl, nodes, tuple(reversed(mults)), status))
    out.sort(key=lambda p: (p.start_level, p.nodes))
    return out


def discrete_trace_eval(diagram: BratteliDiagram, path: TracePath,
                        node, m: int) -> Fraction:
    """Finite-horizon trace value at [node, m] induced by the path:
    chains from node into the path's top node, normalized by chains from
    the root."""
    top = path.top_level
    if m > top:
        raise InvalidArgumentError("node level beyond the path top")
    den = diagram.path_count(diagram.levels[0][0], 0, path.nodes[-1], top)
    num = diagram.path_count(node, m, path.nodes[-1], top)
    return Fraction(num, den)


def heis_ray_certifier(nodes) -> bool:
    """Tail test for the quadrant diagram: a final g-step with r < a, or a
    final h-step with r >= (a-1) b, stays backward-unique at every later
    level (the margin grows by one per step)."""
    if len(nodes) < 2:
        return False
    p, q = nodes[-2], nodes[-1]
    if q == (p[0], p[1] + 1, p[2]):
        return q[0] < q[1]
    if q == (p[0] + p[1], p[1], p[2] + 1):
        return q[0] >= (q[1] - 1) * q[2]
    return False

"""Exact lattice polytopes in dimension <= 4: hulls, gauges, and the
comparison between the gauge and the word length of the lattice points.

Hulls are computed by brute-force facet enumeration over d-subsets of the
input points with integer cross products, so every predicate downstream
(membership, gauge, boundary) is exact rational arithmetic.  The origin is
required to be strictly interior, which makes every facet {x : u.x = c}
carry c > 0 and the gauge Lambda(x) = max_F u.x / c finite and positive
away from 0.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction

from . import groups, growth
from .errors import InvalidArgumentError


def _det(m) -> int:
    n = len(m)
    if n == 0:
        return 1
    if n == 1:
        return m[0][0]
    if n == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    if n == 3:
        return (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
    raise InvalidArgumentError("determinants implemented for n <= 3")


def _cross(rows, d: int) -> tuple:
    """Generalized cross product of d-1 integer vectors in Z^d."""
    out = []
    for j in range(d):
        minor = [[row[i] for i in range(d) if i != j] for row in rows]
        out.append((-1) ** j * _det(minor))
    return tuple(out)


def _rank(vectors) -> int:
    rows = [list(map(Fraction, v)) for v in vectors]
    if not rows:
        return 0
    rank, ncol = 0, len(rows[0])
    for col in range(ncol):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        lead = rows[rank]
        for i in range(rank + 1, len(rows)):
            if rows[i][col]:
                f = rows[i][col] / lead[col]
                rows[i] = [a - f * b for a, b in zip(rows[i], lead)]
        rank += 1
        if rank == len(rows):
            break
    return rank


class LatticePolytope:
    """Full-dimensional hull of integer points with 0 strictly interior."""

    def __init__(self, points, facets, vertices):
        self.points = points      # deduped, sorted input
        self.d = len(points[0])
        self.facets = facets      # list of (u: int tuple, c: int > 0), gcd-reduced
        self.vertices = vertices

    @classmethod
    def hull(cls, points) -> "LatticePolytope":
        pts = sorted({tuple(int(c) for c in p) for p in points})
        if not pts:
            raise InvalidArgumentError("no points")
        d = len(pts[0])
        if any(len(p) != d for p in pts):
            raise InvalidArgumentError("mixed dimensions")
        if not 1 <= d <= 4:
            raise InvalidArgumentError("dimension must be 1..4")
        base = pts[0]
        if _rank([tuple(a - b for a, b in zip(p, base)) for p in pts[1:]]) < d:
            raise InvalidArgumentError("points do not span the full dimension")
        facets = set()
        for combo in itertools.combinations(pts, d):
            rows = [tuple(a - b for a, b in zip(p, combo[0]))
                    for p in combo[1:]]
            u = _cross(rows, d)
            if not any(u):
                continue
            c = sum(a * b for a, b in zip(u, combo[0]))
            vals = [sum(a * b for a, b in zip(u, p)) for p in pts]
            if max(vals) <= c:
                pass
            elif min(vals) >= c:
                u, c = tuple(-a for a in u), -c
            else:
                continue
            if c <= 0:
                raise InvalidArgumentError(
                    "origin is not strictly interior to the hull")
            g = math.gcd(c, *map(abs, u))
            facets.add((tuple(a // g for a in u), c // g))
        facets = sorted(facets)
        vertices = []
        for p in pts:
            active = [u for u, c in facets
                      if sum(a * b for a, b in zip(u, p)) == c]
            if len(active) >= d and _rank(active) == d:
                vertices.append(p)
        return cls(tuple(pts), facets, tuple(vertices))

    def gauge(self, x) -> Fraction:
        """Lambda(x) = min {t >= 0 : x in tK}, exact."""
        best = Fraction(0)
        for u, c in self.facets:
            val = Fraction(sum(a * b for a, b in zip(u, x)), c)
            if val > best:
                best = val
        return best

    def contains(self, x, m: int = 1) -> bool:
        return all(sum(a * b for a, b in zip(u, x)) <= m * c
                   for u, c in self.facets)

    def lattice_points(self, m: int = 1) -> list:
        """All integer points of the m-fold dilate."""
        if m < 0:
            raise InvalidArgumentError("dilation factor must be >= 0")
        if m == 0:
            return [tuple([0] * self.d)]
        lo = [min(v[i] for v in self.vertices) * m for i in range(self.d)]
        hi = [max(v[i] for v in self.vertices) * m for i in range(self.d)]
        out = []
        for x in itertools.product(*(range(a, b + 1)
                                     for a, b in zip(lo, hi))):
            if self.contains(x, m):
                out.append(x)
        return out


def _sumset(base, fold: int) -> set:
    cur = {tuple([0] * len(next(iter(base))))}
    for _ in range(fold):
        cur = {tuple(a + b for a, b in zip(x, s)) for x in cur for s in base}
    return cur


def a17_check(points) -> dict:
    """The three lattice-compatibility conditions of a gauge body, each
    checked for dilations up to the dimension.

    (0) hull(S) has no integer points beyond S;
    (i) the m-fold dilate's integer points are the m-fold sumset of S;
    (ii) integer points never fall strictly between consecutive dilate
         boundaries: each has gauge <= m-1 or exactly m.
    """
    P = LatticePolytope.hull(points)
    S = set(P.points)
    report = {"d": P.d, "conditions": {}, "witnesses": {}}
    ok0 = set(P.lattice_points(1)) == S
    report["conditions"]["0"] = ok0
    for m in range(2, P.d + 1):
        got = set(P.lattice_points(m))
        want = _sumset(S, m)
        key = f"i@{m}"
        report["conditions"][key] = got == want
        if got != want:
            report["witnesses"][key] = sorted(got ^ want)[:5]
    for m in range(1, P.d + 1):
        bad = []
        for x in P.lattice_points(m):
            lam = P.gauge(x)
            if not (lam <= m - 1 or lam == m):
                bad.append((x, lam))
        key = f"ii@{m}"
        report["conditions"][key] = not bad
        if bad:
            report["witnesses"][key] = bad[:5]
    report["pass"] = all(report["conditions"].values())
    return report


@dataclass(frozen=True)
class RightSimplexSpec:
    alpha: tuple
    has_interior_point: bool
    unique_interior: bool
    interior_points: tuple     # of the untranslated simplex
    support: tuple             # lattice points of the translated body


def right_simplex(alpha) -> RightSimplexSpec:
    """The simplex conv{0, alpha_i e_i} translated by -(1,...,1).

    Interior lattice points are enumerated outright; the two closed-form
    conditions (sum 1/alpha_i < 1 for existence, plus 1/max alpha for
    uniqueness) are recomputed independently and cross-checked.
    """
    alpha = tuple(int(a) for a in alpha)
    if len(alpha) < 1 or any(a < 1 for a in alpha):
        raise InvalidArgumentError("alpha must be positive integers")
    d = len(alpha)
    s = sum(Fraction(1, a) for a in alpha)
    has_int = s < 1
    unique = has_int and 1 <= s + Fraction(1, max(alpha))
    interior = []
    for x in itertools.product(*(range(1, a) for a in alpha)):
        if sum(Fraction(xi, ai) for xi, ai in zip(x, alpha)) < 1:
            interior.append(x)
    if has_int != bool(interior) or (unique != (len(interior) == 1)):
        raise InvalidArgumentError(
            f"interior-point conditions disagree with enumeration for {alpha}")
    support = []
    for x in itertools.product(*(range(0, a + 1) for a in alpha)):
        if sum(Fraction(xi, ai) for xi, ai in zip(x, alpha)) <= 1:
            support.append(tuple(xi - 1 for xi in x))
    return RightSimplexSpec(alpha, has_int, unique,
                            tuple(interior), tuple(sorted(support)))


def gauge_vs_wordlength(points, radius: int,
                        element_cap: int = growth.DEFAULT_ELEMENT_CAP) -> dict:
    """Compare l_S with the gauge of hull(S) on the radius-ball of S."""
    P = LatticePolytope.hull(points)
    zero = tuple([0] * P.d)
    if zero not in set(map(tuple, points)):
        raise InvalidArgumentError("support must contain 0")
    desc = groups.free_abelian(P.d)
    aset = growth.AdmissibleSet.make(desc, [tuple(p) for p in points])
    ball = growth.PackedLatticeBall(aset, radius, element_cap)
    mismatches = []
    checked = 0
    max_gap = Fraction(0)
    for m in range(radius + 1):
        for x in ball.gamma(m):
            lam = P.gauge(x)
            checked += 1
            gap = abs(Fraction(m) - lam)
            if gap > max_gap:
                max_gap = gap
            if lam != m:
                mismatches.append((x, m, lam))
    return {"radius": radius, "checked": checked,
            "equal": not mismatches, "max_gap": max_gap,
            "mismatches": sorted(mismatches)[:10]}


def fekete(ball, poly: LatticePolytope, x, n_max: int) -> dict:
    """Subadditive ratios l_S(n x)/n against the gauge limit."""
    if n_max < 1:
        raise InvalidArgumentError("need n_max >= 1")
    lam = poly.gauge(x)
    seq = []
    for n in range(1, n_max + 1):
        nx = tuple(n * c for c in x)
        ln = ball.word_length(nx)
        if ln is None:
            return {"x": tuple(x), "gauge": lam, "seq": seq,
                    "status": "horizon-exceeded", "final_gap": None}
        seq.append((n, ln, Fraction(ln, n)))
    final_gap = abs(seq[-1][2] - lam)
    return {"x": tuple(x), "gauge": lam, "seq": seq, "status": "complete",
            "final_gap": final_gap}

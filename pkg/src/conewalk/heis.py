"""Closed-form word lengths and stabilized weights for the discrete
Heisenberg group, with the quadrant-walk structure results built on them.

Elements are normal-form triples (r, a, b) meaning z^r g^a h^b where z is
the central commutator.  The reachable central range after m steps with
exponents (a, b) fixed is an integer interval; everything here reduces to
computing its endpoints exactly.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction

from . import groups
from .errors import InvalidArgumentError, VerificationError


@dataclass(frozen=True)
class SInterval:
    """Closed integer interval [lo, hi]; empty when lo > hi."""

    lo: int
    hi: int

    @staticmethod
    def empty() -> "SInterval":
        return SInterval(0, -1)

    @property
    def is_empty(self) -> bool:
        return self.lo > self.hi

    def contains(self, r: int) -> bool:
        return self.lo <= r <= self.hi

    def negate(self) -> "SInterval":
        if self.is_empty:
            return self
        return SInterval(-self.hi, -self.lo)


def _max_center(a: int, b: int, m: int) -> int:
    """Largest central exponent over words with a g's, b h's in m steps.

    Requires a, b >= 0, m >= a + b, even defect.  The three branches split
    on which of the two exponents the spare steps saturate first.
    """
    half = (m - a - b) // 2
    if half + b <= a:
        return (half + b) * a
    if half + a <= b:
        return (half + a) * b
    tot = half + a + b
    return (tot // 2) * ((tot + 1) // 2)


def s_interval(a: int, b: int, m: int) -> SInterval:
    """Central exponents r with z^r g^a h^b in the m-ball, as an interval.

    Sign changes of a or b negate the interval; an odd defect m - a - b
    contributes nothing beyond m - 1 because the support contains 1.
    """
    if a < 0:
        return s_interval(-a, b, m).negate()
    if b < 0:
        return s_interval(a, -b, m).negate()
    if m < a + b:
        return SInterval.empty()
    mm = m if (m - a - b) % 2 == 0 else m - 1
    if mm < a + b:
        return SInterval.empty()
    f = _max_center(a, b, mm)
    return SInterval(a * b - f, f)


def l_s_exact(r: int, a: int, b: int) -> int:
    """Word length of z^r g^a h^b over the standard 5-element support."""
    m = abs(a) + abs(b)
    stop = m + 4 * math.isqrt(abs(r)) + 12
    while m <= stop:
        if s_interval(a, b, m).contains(r):
            return m
        m += 2
    raise VerificationError(
        f"no ball of radius <= {stop} contains ({r}, {a}, {b}); "
        "the length bound was violated")


def tilde_l_exact(r: int, a: int, b: int) -> int:
    """Stabilized weight: |a| + |b| when r lies in the tight interval,
    else |a| + |b| + 2."""
    k0 = abs(a) + abs(b)
    if s_interval(a, b, k0).contains(r):
        return k0
    return k0 + 2


# --- quadrant walk (support of (g + h)^m) ------------------------------------

def parabola_level(m: int) -> set:
    """Closed form for supp (g+h)^m: 0 <= a <= m, b = m - a, 0 <= r <= ab."""
    if m < 0:
        raise InvalidArgumentError("level must be >= 0")
    out = set()
    for a in range(m + 1):
        b = m - a
        for r in range(a * b + 1):
            out.add((r, a, b))
    return out


def on_parabola(node) -> bool:
    r, a, b = node
    return a >= 0 and b >= 0 and 0 <= r <= a * b


@functools.lru_cache(maxsize=8)
def quadrant_levels(M: int):
    """supp (g+h)^m for m = 0..M by verbatim left-step expansion.

    Returns a tuple of frozensets; callers must not mutate.
    """
    levels = [frozenset({(0, 0, 0)})]
    for _ in range(M):
        nxt = set()
        for (r, a, b) in levels[-1]:
            nxt.add((r, a + 1, b))        # left step by g
            nxt.add((r + a, a, b + 1))    # left step by h
        levels.append(frozenset(nxt))
    return tuple(levels)


def antecedent_full_criterion(node, j: int) -> bool:
    """Whether every level-j quadrant element reaches node = (r, a, b).

    j is the antecedent level (j steps from the identity, a + b - j steps
    to the node).
    """
    r, a, b = node
    if not on_parabola(node):
        raise InvalidArgumentError(f"{node} is not a quadrant element")
    m = a + b
    if not 0 <= j <= m:
        raise InvalidArgumentError("antecedent level out of range")
    return j <= a <= m - j and j * (m - a) <= r <= a * (m - a) - a * j


# --- boundary strips and their symmetrized union -----------------------------

@dataclass(frozen=True)
class GdReport:
    m: int
    gd: frozenset
    symmetrized: frozenset
    gd_size: int
    symmetrized_size: int
    gd_formula: int
    symmetrized_formula: int


def gd_set(m: int) -> GdReport:
    """Quadrant elements at level m within the two boundary strips
    r <= a or r >= (a-1)(m-a), together with their 8 symmetry images.

    Sizes come from the enumeration; the quadratic closed forms are
    reported alongside for comparison, not asserted.
    """
    if m < 1:
        raise InvalidArgumentError("level must be >= 1")
    level = quadrant_levels(m)[m]
    gd = frozenset(t for t in level
                   if t[0] <= t[1] or t[0] >= (t[1] - 1) * (m - t[1]))
    sym = set()
    for t in gd:
        sym.update(groups.d4_orbit(t))
    return GdReport(m, gd, frozenset(sym), len(gd), len(sym),
                    (m - 1) * (m + 2), 4 * (m * m + m - 3))


def covering_check(m: int, M: int) -> dict:
    """Whether the boundary strip at level m, translated by the full
    quadrant at level M - m, covers the whole level-M quadrant (needs
    M > 2m to have a chance)."""
    if not M > 2 * m:
        raise InvalidArgumentError("need M > 2m")
    desc = groups.heisenberg()
    gd = gd_set(m).gd
    lhs = set()
    left = quadrant_levels(M - m)[M - m]
    for w in left:
        for u in gd:
            lhs.add(groups.mul(desc, w, u))
    target = quadrant_levels(M)[M]
    return {"m": m, "M": M, "covered": lhs == target,
            "lhs_size": len(lhs), "target_size": len(target),
            "missing": sorted(target - lhs)[:5]}


def strip_absorption_check(m: int) -> dict:
    """Whether g^M and h^M translates of level m land inside the boundary
    strip at level M + m, for M = ceil((m+1)(m-2)/4)."""
    if m < 1:
        raise InvalidArgumentError("level must be >= 1")
    num = (m + 1) * (m - 2)
    M = -((-num) // 4)
    if M < 0:
        M = 0
    level = quadrant_levels(m)[m]
    target = gd_set(M + m).gd if M + m >= 1 else {(0, 0, 0)}
    bad = []
    for (r, a, b) in level:
        gt = (r, a + M, b)          # g^M on the left
        ht = (r + M * a, a, b + M)  # h^M on the left
        if gt not in target:
            bad.append(("g", gt))
        if ht not in target:
            bad.append(("h", ht))
    return {"m": m, "M": M, "pass": not bad, "violations": bad[:5]}


# --- full-support walk coefficients ------------------------------------------

@functools.lru_cache(maxsize=4)
def full_coeffs(depth: int):
    """Coefficient dicts of f^m, m = 0..depth, for the standard admissible
    f = 1 + g + g^-1 + h + h^-1.  Returns a tuple of dicts; do not mutate.
    """
    if depth < 0:
        raise InvalidArgumentError("depth must be >= 0")
    desc = groups.heisenberg()
    steps = groups.heis_standard_support()
    out = [{(0, 0, 0): 1}]
    for _ in range(depth):
        nxt: dict = {}
        for w, c in out[-1].items():
            for s in steps:
                t = groups.mul(desc, s, w)
                nxt[t] = nxt.get(t, 0) + c
        out.append(nxt)
    return tuple(out)


def infinitesimal_check(r: int, k: int) -> dict:
    """Coefficient lower bound under a central shift: for every w in
    supp f^k whose shift z^r w has stabilized weight k + 2,

        m(z^r w, k + 2) >= (k/2 - |r|) m(w, k).

    Exact integer/rational arithmetic throughout.
    """
    if k < 1 or k <= 2 * abs(r):
        raise InvalidArgumentError("need k > 2|r| >= 0")
    coeffs = full_coeffs(k + 2)
    base, target = coeffs[k], coeffs[k + 2]
    factor = Fraction(k, 2) - abs(r)
    checked = 0
    ok = True
    min_margin = None
    worst = None
    for w, mw in base.items():
        x = (w[0] + r, w[1], w[2])
        if tilde_l_exact(*x) != k + 2:
            continue
        checked += 1
        margin = Fraction(target.get(x, 0)) - factor * mw
        if min_margin is None or margin < min_margin:
            min_margin, worst = margin, x
        if margin < 0:
            ok = False
    return {"r": r, "k": k, "pass": ok, "checked": checked,
            "min_margin": min_margin, "worst": worst}


def nonnoetherian_witness(n: int, M: int) -> dict:
    """Exhibit the strict-ideal-chain witness at stage n: check that
    g^M w(n) avoids every supp (g+h)^{M+4i} w(n-i), 1 <= i < n, where
    w(j) = z^{2j} g^{2j} h^{2j+1}.  n = 1 has no earlier stage to compare.
    """
    if n < 2:
        raise InvalidArgumentError("need n >= 2; stage 1 has no predecessor")
    if M < 1:
        raise InvalidArgumentError("need M >= 1")
    desc = groups.heisenberg()

    def w(j):
        return (2 * j, 2 * j, 2 * j + 1)

    lhs = groups.mul(desc, groups.power(desc, groups.HEIS_G, M), w(n))
    details = []
    ok = True
    for i in range(1, n):
        u = groups.mul(desc, lhs, groups.inv(desc, w(n - i)))
        depth = M + 4 * i
        hit = u in quadrant_levels(depth)[depth]
        details.append({"i": i, "translate": u, "in_support": hit})
        if hit:
            ok = False
    return {"n": n, "M": M, "pass": ok, "element": lhs, "details": details}

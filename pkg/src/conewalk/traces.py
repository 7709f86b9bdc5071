"""Harmonic weight systems on the quadrant diagram, evaluated exactly.

A weight system assigns a value to each node [w, m] of the diagram of the
walk f-bar = g + h so that the value of a node equals the sum over its two
successors (harmonicity) and the coefficient-weighted level sums equal 1
(normalization).  Discrete systems concentrate along a g-ray or h-ray;
the multiplicative family interpolates between the two rays.

All discrete and rational-parameter evaluations are exact Fractions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import heis, partitions
from .errors import InvalidArgumentError


@dataclass(frozen=True)
class NodeRef:
    """A quadrant element pinned to its diagram level (= a + b)."""

    node: tuple

    def __post_init__(self):
        if not heis.on_parabola(self.node):
            raise InvalidArgumentError(f"{self.node} is not a quadrant element")

    @property
    def level(self) -> int:
        return self.node[1] + self.node[2]


@dataclass(frozen=True)
class LowerDiscrete:
    """Ray system tau_{r,b}: supported near z^r g^{m-b} h^b for large m."""

    r: int
    b: int

    def __post_init__(self):
        if self.r < 0 or self.b < 0:
            raise InvalidArgumentError("need r, b >= 0")
        if self.b == 0 and self.r != 0:
            raise InvalidArgumentError("b = 0 forces r = 0")


@dataclass(frozen=True)
class UpperDiscrete:
    """Ray system tau^{c,d}: the image of a lower system under the
    exponent-swapping symmetry."""

    c: int
    d: int

    def __post_init__(self):
        if self.c < 0 or self.d < 0:
            raise InvalidArgumentError("need c, d >= 0")
        if self.c == 0 and self.d != 0:
            raise InvalidArgumentError("c = 0 forces d = 0")


@dataclass(frozen=True)
class Multiplicative:
    """Product system t^a (1-t)^b; t rational gives exact values."""

    t: object  # Fraction for exact work, float for limit experiments


@dataclass(frozen=True)
class Faithful:
    """Positive-character system x^a y^b / (1+x+1/x+y+1/y)^k on the full
    walk; defined at [w, k] only when k >= the stabilized weight of w."""

    x: Fraction
    y: Fraction

    def __post_init__(self):
        if self.x <= 0 or self.y <= 0:
            raise InvalidArgumentError("need x, y > 0")


def _lower_eval(r: int, b: int, node) -> Fraction:
    R, A, B = node
    m = A + B
    den = partitions.p2(r, b)
    if m >= r + b:
        return Fraction(1, den) if node == (r, m - b, b) else Fraction(0)
    num = partitions.p3(r - R - A * (b + A - m), r - A, b - m + A)
    return Fraction(num, den)


def eval_trace(spec, node, k: int | None = None):
    """Value of the weight system at [node, level].

    Parabola systems infer the level from the node; Faithful needs the
    level k passed explicitly.
    """
    if isinstance(spec, Faithful):
        if k is None:
            raise InvalidArgumentError("Faithful evaluation needs the level k")
        return faithful_eval(spec.x, spec.y, node, k)
    if not heis.on_parabola(node):
        raise InvalidArgumentError(f"{node} is not a quadrant element")
    if isinstance(spec, LowerDiscrete):
        return _lower_eval(spec.r, spec.b, node)
    if isinstance(spec, UpperDiscrete):
        R, A, B = node
        return _lower_eval(spec.d, spec.c, (A * B - R, B, A))
    if isinstance(spec, Multiplicative):
        t = spec.t
        one = Fraction(1) if isinstance(t, Fraction) else 1.0
        return t ** node[1] * (one - t) ** node[2]
    raise InvalidArgumentError(f"unknown weight system {spec!r}")


def harmonicity_residual(spec, node):
    """eval(node) - eval(g.node) - eval(h.node); zero iff harmonic here."""
    R, A, B = node
    return (eval_trace(spec, node)
            - eval_trace(spec, (R, A + 1, B))
            - eval_trace(spec, (R + A, A, B + 1)))


def normalization(spec, m: int):
    """Coefficient-weighted level sum; equals 1 for a normalized system."""
    if isinstance(spec, Faithful):
        raise InvalidArgumentError("use faithful_normalization for Faithful")
    total = 0
    for a in range(m + 1):
        b = m - a
        for r in range(a * b + 1):
            c = partitions.p3(r, a, b)
            total += c * eval_trace(spec, (r, a, b))
    return total


def faithful_eval(x: Fraction, y: Fraction, w, k: int) -> Fraction:
    """x^a y^b / (1+x+1/x+y+1/y)^k at w = (r, a, b); needs k >= weight(w)."""
    r, a, b = w
    if k < heis.tilde_l_exact(r, a, b):
        raise InvalidArgumentError(
            f"level {k} below the stabilized weight of {w}")
    x, y = Fraction(x), Fraction(y)
    den = (1 + x + 1 / x + y + 1 / y) ** k
    return (x ** a) * (y ** b) / den


def faithful_normalization(x: Fraction, y: Fraction, k: int) -> Fraction:
    """Sum of m(w, k) * value over supp f^k; equals 1 exactly."""
    coeffs = heis.full_coeffs(k)[k]
    total = Fraction(0)
    for w, c in coeffs.items():
        r, a, b = w
        x_, y_ = Fraction(x), Fraction(y)
        total += c * (x_ ** a) * (y_ ** b)
    return total / ((1 + Fraction(x) + 1 / Fraction(x)
                     + Fraction(y) + 1 / Fraction(y)) ** k)


DEFAULT_TEST_NODES = ((0, 1, 0), (0, 0, 1), (0, 1, 1), (1, 1, 1), (0, 2, 1))


def limit_table(pairs, nodes=DEFAULT_TEST_NODES) -> list:
    """Compare tau_{r,k} against the multiplicative system with
    t = exp(-v(k/sqrt(r))) on the given test nodes.

    Returns one row per (r, k) pair with the sup-norm error, for
    convergence experiments along r -> infinity at fixed k/sqrt(r).
    """
    from . import szekeres
    rows = []
    for r, k in pairs:
        alpha = k / math.sqrt(r)
        t = math.exp(-szekeres.v_of(alpha))
        spec = LowerDiscrete(r, k)
        sup = 0.0
        for node in nodes:
            got = float(eval_trace(spec, node))
            want = (t ** node[1]) * ((1.0 - t) ** node[2])
            sup = max(sup, abs(got - want))
        rows.append({"r": r, "k": k, "alpha": alpha, "t": t,
                     "sup_error": sup})
    return rows

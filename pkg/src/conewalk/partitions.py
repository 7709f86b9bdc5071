"""Bounded partition counts via the q-binomial recurrence, plus the walk
coefficient slices they must reproduce.

p3(r, a, b) counts partitions of r into at most a parts, each at most b;
equivalently the coefficient of q^r in the Gaussian binomial [a+b, a]_q,
and the coefficient of z^r g^a h^b in (g + h)^{a+b}.  p2(r, b) drops the
part-count bound.  Two independent routes are kept deliberately: the
q-Pascal recurrence and verbatim walk convolution.
"""

from __future__ import annotations

import functools
import os
import pickle
from dataclasses import dataclass

from .errors import InvalidArgumentError


@functools.lru_cache(maxsize=None)
def gaussian_binomial(n: int, k: int) -> tuple:
    """Coefficient vector of [n, k]_q (degree k(n-k)), by the q-Pascal rule
    [n, k] = [n-1, k-1] + q^k [n-1, k].  No symmetric reduction: computing
    [n, k] and [n, n-k] stays independent on purpose.
    """
    if not 0 <= k <= n:
        raise InvalidArgumentError("need 0 <= k <= n")
    if k == 0 or k == n:
        return (1,)
    left = gaussian_binomial(n - 1, k - 1)
    right = gaussian_binomial(n - 1, k)
    out = [0] * (k * (n - k) + 1)
    for i, c in enumerate(left):
        out[i] += c
    for i, c in enumerate(right):
        out[i + k] += c
    return tuple(out)


class _BoundedPartsTable:
    """Rows dp[j][v] = partitions of v into parts <= j, grown on demand."""

    def __init__(self):
        self.rmax = 0
        self.rows = [[1]]

    def ensure(self, b: int, r: int):
        if r > self.rmax:
            grown = max(r, 2 * self.rmax)
            base = [1] + [0] * grown
            self.rows, self.rmax = [base], grown
        while len(self.rows) <= b:
            j = len(self.rows)
            row = self.rows[j - 1][:]
            for v in range(j, self.rmax + 1):
                row[v] += row[v - j]
            self.rows.append(row)

    def get(self, r: int, b: int) -> int:
        self.ensure(b, r)
        return self.rows[b][r]


_P2 = _BoundedPartsTable()


def p2(r: int, b: int) -> int:
    """Partitions of r into parts of size at most b."""
    if r < 0:
        return 0
    if r == 0:
        return 1
    if b <= 0:
        return 0
    return _P2.get(r, min(b, r))


def p3(r: int, a: int, b: int) -> int:
    """Partitions of r into at most a parts, each at most b."""
    if r < 0:
        return 0
    if r == 0:
        return 1 if a >= 0 and b >= 0 else 0
    if a <= 0 or b <= 0:
        return 0
    while True:
        if r > a * b:
            return 0
        if a >= r:
            return p2(r, b)
        if b >= r:
            return p2(r, a)
        if 2 * r > a * b:
            r = a * b - r
            continue
        return gaussian_binomial(a + b, a)[r]


def p3_profile(a: int, b: int) -> tuple:
    """The full vector (p3(0,a,b), ..., p3(ab,a,b)) from one recurrence run."""
    if a < 0 or b < 0:
        raise InvalidArgumentError("need a, b >= 0")
    return gaussian_binomial(a + b, a)


@dataclass(frozen=True)
class CoeffSlice:
    """Coefficients of (g+h)^m on the level-m quadrant."""

    m: int
    coeffs: dict


def coeff_oracle(m: int) -> CoeffSlice:
    """Verbatim convolution route for the (g+h)^m coefficients.

    Left steps act on normal forms by g.(r,a,b) = (r,a+1,b) and
    h.(r,a,b) = (r+a,a,b+1); no partition identity is consulted.
    """
    if m < 0:
        raise InvalidArgumentError("need m >= 0")
    cur = {(0, 0, 0): 1}
    for _ in range(m):
        nxt: dict = {}
        for (r, a, b), c in cur.items():
            for t in ((r, a + 1, b), (r + a, a, b + 1)):
                nxt[t] = nxt.get(t, 0) + c
        cur = nxt
    return CoeffSlice(m, cur)


def ratio_check(a: int, b: int) -> dict:
    """Adjacent-coefficient bound p(r +- 1, a, b) <= 2 p(r, a, b)."""
    vec = p3_profile(a, b)
    worst = 0.0
    ok = True
    for i in range(len(vec) - 1):
        lo, hi = min(vec[i], vec[i + 1]), max(vec[i], vec[i + 1])
        if hi > 2 * lo:
            ok = False
        if lo and hi / lo > worst:
            worst = hi / lo
    return {"a": a, "b": b, "pass": ok, "max_adjacent_ratio": worst}


def is_symmetric(a: int, b: int) -> bool:
    """Palindromy in r and the a <-> b exchange, both from raw recurrences."""
    vec = p3_profile(a, b)
    return vec == vec[::-1] and vec == gaussian_binomial(a + b, b)


def is_unimodal(a: int, b: int) -> bool:
    vec = p3_profile(a, b)
    falling = False
    for i in range(len(vec) - 1):
        if vec[i + 1] < vec[i]:
            falling = True
        elif vec[i + 1] > vec[i] and falling:
            return False
    return True


class PartitionTable:
    """Facade over the cached recurrences, with optional disk persistence
    of the unbounded-count rows (the only expensive table).

    The cache directory comes from the CONEWALK_CACHE environment variable
    when not given explicitly.
    """

    p2 = staticmethod(p2)
    p3 = staticmethod(p3)
    p3_profile = staticmethod(p3_profile)
    coeff_oracle = staticmethod(coeff_oracle)
    ratio_check = staticmethod(ratio_check)

    @staticmethod
    def _cache_file(directory=None):
        directory = directory or os.environ.get("CONEWALK_CACHE")
        if not directory:
            return None
        os.makedirs(directory, exist_ok=True)
        return os.path.join(directory, "bounded_parts.pkl")

    @staticmethod
    def save(directory=None) -> str | None:
        path = PartitionTable._cache_file(directory)
        if path:
            with open(path, "wb") as fh:
                pickle.dump({"rmax": _P2.rmax, "rows": _P2.rows}, fh)
        return path

    @staticmethod
    def load(directory=None) -> bool:
        path = PartitionTable._cache_file(directory)
        if not path or not os.path.exists(path):
            return False
        with open(path, "rb") as fh:
            data = pickle.load(fh)
        if data["rmax"] > _P2.rmax:
            _P2.rmax = data["rmax"]
            _P2.rows = data["rows"]
        return True

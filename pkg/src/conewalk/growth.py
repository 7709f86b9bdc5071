"""Ball sequences and witnessed stabilized-weight bounds.

For a finite support S (the walk kernel's support) the level sets are
supp f^m, built by left multiplication: supp f^{m+1} = S * supp f^m.  When
1 is in S these are the balls S^m and levels nest; otherwise they need not.

The stabilized weight of x is the least k such that S^m x <= S^{m+k} for
some m.  Inclusions are monotone in m (multiply on the left by S), so within
a ball of depth M a witness for k exists at some m <= M-k iff it exists at
m = M-k; each candidate k therefore needs exactly one verbatim inclusion
check.  Absence of a witness inside the horizon is *never* reported as a
lower bound; every bound carries a status field.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import groups, kernel
from .errors import InvalidArgumentError, ResourceCapError

DEFAULT_ELEMENT_CAP = 5_000_000

WITNESSED = "witnessed"
NOT_WITNESSED = "not-witnessed-below"


@dataclass(frozen=True)
class AdmissibleSet:
    """A finite, deduplicated support; ``admissible`` means it contains 1."""

    desc: groups.GroupDescriptor
    elements: tuple

    @staticmethod
    def make(desc, elements) -> "AdmissibleSet":
        seen, out = set(), []
        for x in elements:
            groups.validate(desc, x)
            if x not in seen:
                seen.add(x)
                out.append(x)
        if not out:
            raise InvalidArgumentError("support must be nonempty")
        return AdmissibleSet(desc, tuple(out))

    @property
    def admissible(self) -> bool:
        return groups.identity(self.desc) in self.elements


@dataclass
class TildeLBound:
    """Witnessed upper bound for the stabilized weight of ``element``.

    status is "witnessed" (k, witness_m valid) or "not-witnessed-below",
    meaning no k <= k_searched admits a witness inside the horizon; that is
    NOT a lower bound on the true weight.
    """

    element: object
    k: int | None
    witness_m: int | None
    horizon: int
    k_searched: int
    status: str


class DictBall:
    """Generic engine: levels as hash sets of elements, any group kind."""

    def __init__(self, aset: AdmissibleSet, M: int,
                 element_cap: int = DEFAULT_ELEMENT_CAP):
        self.aset = aset
        self.desc = aset.desc
        self.M = M
        self.admissible = aset.admissible
        ident = groups.identity(self.desc)
        self.levels: list[set] = [{ident}]
        self.first_seen: dict = {ident: 0}
        total = 1
        for m in range(1, M + 1):
            if self.admissible:
                src = self.levels[m - 1]  # frontier: new elements only
                nxt = set()
                for s in aset.elements:
                    for w in src:
                        t = groups.mul(self.desc, s, w)
                        if t not in self.first_seen:
                            nxt.add(t)
            else:
                src = self.levels[m - 1]
                nxt = {groups.mul(self.desc, s, w)
                       for s in aset.elements for w in src}
            for t in nxt:
                if t not in self.first_seen:
                    self.first_seen[t] = m
            self.levels.append(nxt)
            total += len(nxt)
            if total > element_cap:
                raise ResourceCapError(
                    f"growth to depth {M} exceeded element cap {element_cap}",
                    partial={"complete_depth": m - 1, "elements": total})

    # fresh elements at level m (for admissible sets these are Gamma_m)
    def gamma(self, m: int) -> set:
        self._check_level(m)
        if self.admissible:
            return self.levels[m]
        return {x for x in self.levels[m] if self.first_seen[x] == m}

    def support(self, m: int) -> set:
        """supp f^m as a set."""
        self._check_level(m)
        if not self.admissible:
            return self.levels[m]
        out = set()
        for j in range(m + 1):
            out |= self.levels[j]
        return out

    def support_size(self, m: int) -> int:
        self._check_level(m)
        if self.admissible:
            return sum(len(self.levels[j]) for j in range(m + 1))
        return len(self.levels[m])

    def contains(self, x, m: int) -> bool:
        self._check_level(m)
        if self.admissible:
            lv = self.first_seen.get(x)
            return lv is not None and lv <= m
        return x in self.levels[m]

    def word_length(self, x) -> int | None:
        """Least m with x in supp f^m inside the horizon, else None."""
        return self.first_seen.get(x)

    def translate_subset(self, x, m: int, k: int):
        """Verbatim check supp f^m * x <= supp f^{m+k}; (ok, witness)."""
        self._check_level(m + k)
        if k < 0:
            raise InvalidArgumentError("k must be >= 0")
        for u in self._iter_support(m):
            t = groups.mul(self.desc, u, x)
            if not self.contains(t, m + k):
                return False, u
        return True, None

    def _iter_support(self, m: int):
        if self.admissible:
            return itertools.chain.from_iterable(self.levels[:m + 1])
        return iter(self.levels[m])

    def dead_ends(self, k: int) -> set:
        """Elements of level k with no S-step landing in level k+1."""
        self._check_level(k + 1)
        out = set()
        nxt = self.gamma(k + 1) if self.admissible else self.levels[k + 1]
        for x in self.gamma(k):
            if not any(groups.mul(self.desc, s, x) in nxt
                       for s in self.aset.elements):
                out.add(x)
        return out

    def _check_level(self, m: int):
        if not 0 <= m <= self.M:
            raise InvalidArgumentError(
                f"level {m} outside computed horizon {self.M}")


class HeisBallSequence:
    """Adapter presenting kernel.HeisBall through the DictBall interface."""

    def __init__(self, ball: kernel.HeisBall):
        self.ball = ball
        self.M = ball.M
        self.admissible = True
        self.desc = groups.heisenberg()

    def gamma(self, m: int) -> set:
        return {tuple(int(v) for v in row) for row in self.ball.gamma_triples(m)}

    def support_size(self, m: int) -> int:
        if not 0 <= m <= self.M:
            raise InvalidArgumentError(f"level {m} outside horizon {self.M}")
        return self.ball.sizes[m]

    def contains(self, x, m: int) -> bool:
        return self.ball.contains(x, m)

    def word_length(self, x) -> int | None:
        return self.ball.level_first(x)

    def translate_subset(self, x, m: int, k: int):
        return self.ball.translate_subset(x, m, k)

    @property
    def backend(self) -> str:
        return self.ball.backend


def grow(aset: AdmissibleSet, M: int, element_cap: int = DEFAULT_ELEMENT_CAP,
         engine: str = "auto"):
    """Build levels supp f^0..supp f^M with the best available engine."""
    if M < 0:
        raise InvalidArgumentError("depth must be >= 0")
    if engine not in ("auto", "dict", "packed"):
        raise InvalidArgumentError(f"unknown engine {engine!r}")
    std = aset.desc.kind == groups.HEISENBERG and \
        set(aset.elements) == set(groups.heis_standard_support())
    if engine == "packed" or (engine == "auto" and std and M > 14):
        if not std:
            raise InvalidArgumentError(
                "packed engine supports only the standard Heisenberg set")
        return HeisBallSequence(kernel.build_heis_ball(M, element_cap))
    return DictBall(aset, M, element_cap)


def tilde_l_upper(ball, x, k_max: int) -> TildeLBound:
    """Smallest k <= k_max with a witnessed inclusion supp f^m x <= supp f^{m+k}.

    By monotonicity in m, k is witnessed somewhere iff it is witnessed at
    m = M - k, so one check per k decides it for the whole horizon.
    """
    if k_max < 0:
        raise InvalidArgumentError("k_max must be >= 0")
    k_top = min(k_max, ball.M)
    for k in range(k_top + 1):
        ok, _ = ball.translate_subset(x, ball.M - k, k)
        if ok:
            return TildeLBound(x, k, ball.M - k, ball.M, k_top, WITNESSED)
    return TildeLBound(x, None, None, ball.M, k_top, NOT_WITNESSED)


def census(ball, k: int, oracle=None) -> tuple[int, str]:
    """Count elements of the computed ball with stabilized weight <= k.

    With an exact oracle the count is exact over the ball (status "exact");
    otherwise witnessed upper bounds are used and the count is a lower
    estimate of the true level-set size (status "lower-estimate").
    """
    count = 0
    if oracle is not None:
        for m in range(ball.M + 1):
            for x in ball.gamma(m):
                if oracle(x) <= k:
                    count += 1
        return count, "exact"
    for m in range(ball.M + 1):
        for x in ball.gamma(m):
            bound = tilde_l_upper(ball, x, k)
            if bound.status == WITNESSED and bound.k <= k:
                count += 1
    return count, "lower-estimate"


def ratio_stats(ball, k: int) -> list[Fraction]:
    """|supp f^{m+k}| / |supp f^m| for m = 0..M-k, as exact rationals."""
    if not 0 <= k <= ball.M:
        raise InvalidArgumentError("need 0 <= k <= horizon")
    return [Fraction(ball.support_size(m + k), ball.support_size(m))
            for m in range(ball.M - k + 1)]


def gamma_prime(ball, k: int, oracle=None) -> tuple[set, str]:
    """Level-k elements of exact stabilized weight k (the balanced shell).

    With an oracle: {x in supp f^k : weight(x) = k}, status "exact".
    Without: elements whose *witnessed* bound equals k, status "heuristic"
    (can both miss and never overstate: witnessed >= true weight).
    """
    members = set()
    if oracle is not None:
        for m in range(k + 1):
            for x in ball.gamma(m):
                if oracle(x) == k:
                    members.add(x)
        return members, "exact"
    for m in range(k + 1):
        for x in ball.gamma(m):
            bound = tilde_l_upper(ball, x, k)
            if bound.status == WITNESSED and bound.k == k:
                members.add(x)
    return members, "heuristic"


def ideal_compare(weight, x, y, desc) -> str:
    """Compare the order ideals generated by x and y via weight identities.

    weight is an exact stabilized-weight oracle.  Returns one of
    "equal", "x-in-y", "y-in-x", "incomparable-or-unknown".
    """
    wx, wy = weight(x), weight(y)
    xyi = weight(groups.mul(desc, x, groups.inv(desc, y)))
    if xyi == 0:
        return "equal"
    if xyi == wx - wy:
        return "x-in-y"
    yxi = weight(groups.mul(desc, y, groups.inv(desc, x)))
    if yxi == wy - wx:
        return "y-in-x"
    return "incomparable-or-unknown"


# --- packed engine for lattice supports (Z^d, d <= 4) -----------------------

_FIELD_BITS = 15
_FIELD_OFF = 1 << 14


class PackedLatticeBall:
    """Frontier-expansion ball for an admissible subset of Z^d.

    Coordinates are packed into disjoint 15-bit fields of an int64, so a
    generator step is a constant key increment.  Valid while every coordinate
    stays under 2^14 - 2 in absolute value, which the constructor enforces.
    """

    def __init__(self, aset: AdmissibleSet, M: int,
                 element_cap: int = DEFAULT_ELEMENT_CAP):
        if aset.desc.kind != groups.FREE_ABELIAN:
            raise InvalidArgumentError("packed lattice engine needs Z^d")
        if not aset.admissible:
            raise InvalidArgumentError("support must contain 0")
        self.desc = aset.desc
        self.aset = aset
        self.M = M
        self.admissible = True
        d = aset.desc.rank
        if d > 4:
            raise InvalidArgumentError("packed lattice engine supports d <= 4")
        maxc = max((abs(c) for s in aset.elements for c in s), default=0)
        if M * maxc >= _FIELD_OFF - 2:
            raise ResourceCapError("coordinates would overflow packed fields")
        self._d = d
        deltas = [self._pack_delta(s) for s in aset.elements if any(s)]
        keys = np.array([self._pack(groups.identity(aset.desc))], dtype=np.int64)
        levels = [keys]
        all_keys = keys.copy()
        total = 1
        for m in range(1, M + 1):
            frontier = levels[-1]
            cand = np.unique(np.concatenate(
                [frontier + dv for dv in deltas])) if deltas else frontier[:0]
            pos = np.searchsorted(all_keys, cand)
            pos_c = np.minimum(pos, len(all_keys) - 1)
            fresh = cand[(pos >= len(all_keys)) | (all_keys[pos_c] != cand)]
            levels.append(fresh)
            all_keys = np.sort(np.concatenate([all_keys, fresh]))
            total += len(fresh)
            if total > element_cap:
                raise ResourceCapError(
                    f"lattice growth exceeded element cap {element_cap}",
                    partial={"complete_depth": m - 1, "elements": total})
        self.levels = levels
        self._all_keys = all_keys
        lev = np.empty(len(all_keys), dtype=np.int16)
        for m, lv in enumerate(levels):
            lev[np.searchsorted(all_keys, lv)] = m
        self._all_levels = lev

    def _pack(self, x) -> int:
        key = 0
        for i, c in enumerate(x):
            key |= (c + _FIELD_OFF) << (_FIELD_BITS * i)
        return key

    def _pack_delta(self, s) -> int:
        key = 0
        for i, c in enumerate(s):
            key += c << (_FIELD_BITS * i)
        return key

    def _unpack(self, keys: np.ndarray) -> np.ndarray:
        out = np.empty((len(keys), self._d), dtype=np.int64)
        for i in range(self._d):
            out[:, i] = ((keys >> (_FIELD_BITS * i)) & 0x7FFF) - _FIELD_OFF
        return out

    def gamma(self, m: int) -> set:
        if not 0 <= m <= self.M:
            raise InvalidArgumentError(f"level {m} outside horizon {self.M}")
        return {tuple(int(v) for v in row)
                for row in self._unpack(self.levels[m])}

    def support_size(self, m: int) -> int:
        if not 0 <= m <= self.M:
            raise InvalidArgumentError(f"level {m} outside horizon {self.M}")
        return int(sum(len(lv) for lv in self.levels[:m + 1]))

    def word_length(self, x) -> int | None:
        if any(abs(c) >= _FIELD_OFF - 1 for c in x):
            return None
        key = self._pack(x)
        pos = int(np.searchsorted(self._all_keys, key))
        if pos >= len(self._all_keys) or self._all_keys[pos] != key:
            return None
        return int(self._all_levels[pos])

    def contains(self, x, m: int) -> bool:
        lv = self.word_length(x)
        return lv is not None and lv <= m

    def translate_subset(self, x, m: int, k: int):
        if not (0 <= m and 0 <= k and m + k <= self.M):
            raise InvalidArgumentError("need 0 <= m and m + k <= horizon")
        dv = self._pack_delta(x)
        for j in range(m, -1, -1):
            keys = self.levels[j] + dv
            pos = np.searchsorted(self._all_keys, keys)
            pos_c = np.minimum(pos, len(self._all_keys) - 1)
            ok = (pos < len(self._all_keys)) & (self._all_keys[pos_c] == keys) \
                & (self._all_levels[pos_c] <= m + k)
            bad = np.nonzero(~ok)[0]
            if len(bad):
                u = tuple(int(v) for v in self._unpack(
                    self.levels[j][bad[0]:bad[0] + 1])[0])
                return False, u
        return True, None

"""Packed-array engine for balls of the standard Heisenberg walk support.

Selects the compiled kernel when the extension built, otherwise the numpy
fallback; ``BACKEND`` records the choice.  Both implement the same contract
(see _heiskern_np).  On top of the raw levels this module maintains
per-column r-statistics used for fast translate-inclusion checks:

For each level m and each column (a, b), the r-values of S^m in that column
are aggregated to (min, max, count).  When count == max - min + 1 the column
is a gap-free interval; this is *verified from the enumerated data*, never
assumed.  Given gap-free target columns, the inclusion S^m * x <= S^{m+k}
reduces to endpoint containment per column, which is exactly equivalent to
the elementwise check and much cheaper.  Any failure is returned as a
concrete witness element and re-verified against the dense occupancy table.
"""

from __future__ import annotations

import numpy as np

from .errors import InvalidArgumentError, ResourceCapError

try:  # pragma: no cover - depends on build environment
    from . import _heiskern as _impl
    BACKEND = "cython"
except ImportError:  # pragma: no cover
    from . import _heiskern_np as _impl
    BACKEND = "numpy"

from . import _heiskern_np as _np_impl

R_OFF = _impl.R_OFF
ABSENT = _impl.ABSENT
MAX_DEPTH = 120
DEFAULT_ELEMENT_CAP = 5_000_000


def pack_triples(triples: np.ndarray) -> np.ndarray:
    t = np.asarray(triples, dtype=np.int64)
    return ((t[:, 0] + R_OFF) << 16) | ((t[:, 1] + 128) << 8) | (t[:, 2] + 128)


def unpack_keys(keys: np.ndarray) -> np.ndarray:
    keys = np.asarray(keys, dtype=np.int64)
    out = np.empty((len(keys), 3), dtype=np.int64)
    out[:, 0] = (keys >> 16) - R_OFF
    out[:, 1] = ((keys >> 8) & 0xFF) - 128
    out[:, 2] = (keys & 0xFF) - 128
    return out


class HeisBall:
    """Levels Gamma_0..Gamma_M of the ball, with witness-check machinery."""

    def __init__(self, M: int, levels: list[np.ndarray], level_of: np.ndarray,
                 backend: str):
        self.M = M
        self.levels = levels
        self.level_of = level_of
        self.backend = backend
        self.gamma_sizes = [len(lv) for lv in levels]
        self.sizes = list(np.cumsum(self.gamma_sizes))
        # lazy cumulative column stats: per level (cols, rmin, rmax, cnt)
        self._col = []
        self._col_ok = []

    # -- membership -------------------------------------------------------

    def level_first(self, t) -> int | None:
        """Word length of (r,a,b), or None if outside S^M."""
        arr = np.array([t], dtype=np.int64)
        lev = _impl.lookup_levels(arr, self.level_of, self.M)[0]
        return None if lev == ABSENT else int(lev)

    def contains(self, t, m: int) -> bool:
        lev = self.level_first(t)
        return lev is not None and lev <= m

    def gamma_triples(self, m: int) -> np.ndarray:
        if not 0 <= m <= self.M:
            raise InvalidArgumentError(f"level {m} outside ball depth {self.M}")
        return unpack_keys(self.levels[m])

    # -- column statistics --------------------------------------------------

    @staticmethod
    def _level_stats(keys: np.ndarray):
        cols = (keys & 0xFFFF).astype(np.int64)
        rs = (keys >> 16) - R_OFF
        order = np.argsort(cols, kind="stable")
        cols_s, rs_s = cols[order], rs[order]
        uniq, starts = np.unique(cols_s, return_index=True)
        rmin = np.minimum.reduceat(rs_s, starts)
        rmax = np.maximum.reduceat(rs_s, starts)
        cnt = np.diff(np.append(starts, len(rs_s)))
        return uniq, rmin, rmax, cnt

    def col_stats(self, m: int):
        """Cumulative (cols, rmin, rmax, cnt) for S^m, built incrementally."""
        if not 0 <= m <= self.M:
            raise InvalidArgumentError(f"level {m} outside ball depth {self.M}")
        while len(self._col) <= m:
            j = len(self._col)
            lvl = self._level_stats(self.levels[j]) if len(self.levels[j]) else \
                (np.empty(0, np.int64),) * 4
            if j == 0:
                cur = lvl
            else:
                pc, pmin, pmax, pcnt = self._col[-1]
                lc, lmin, lmax, lcnt = lvl
                allc = np.concatenate([pc, lc])
                uniq, inverse = np.unique(allc, return_inverse=True)
                rmin = np.full(len(uniq), np.iinfo(np.int64).max, dtype=np.int64)
                rmax = np.full(len(uniq), np.iinfo(np.int64).min, dtype=np.int64)
                cnt = np.zeros(len(uniq), dtype=np.int64)
                np.minimum.at(rmin, inverse, np.concatenate([pmin, lmin]))
                np.maximum.at(rmax, inverse, np.concatenate([pmax, lmax]))
                np.add.at(cnt, inverse, np.concatenate([pcnt, lcnt]))
                cur = (uniq, rmin, rmax, cnt)
            self._col.append(cur)
            _, rmin, rmax, cnt = cur
            self._col_ok.append(bool(np.all(cnt == rmax - rmin + 1)))
        return self._col[m]

    def columns_are_intervals(self, m: int) -> bool:
        self.col_stats(m)
        return self._col_ok[m]

    # -- translate inclusion ------------------------------------------------

    def translate_subset(self, x, m: int, k: int, mode: str = "auto"):
        """Check S^m * x <= S^{m+k} verbatim against the enumerated ball.

        Returns (True, None) or (False, witness) where witness is an element
        u of S^m with u*x outside S^{m+k}.  mode: auto | columns | elementwise.
        """
        r, a, b = (int(v) for v in x)
        if m < 0 or k < 0 or m + k > self.M:
            raise InvalidArgumentError("need 0 <= m and m + k <= ball depth")
        if mode not in ("auto", "columns", "elementwise"):
            raise InvalidArgumentError(f"unknown mode {mode!r}")
        if mode != "elementwise" and self.columns_are_intervals(m + k):
            return self._translate_subset_columns((r, a, b), m, k)
        if mode == "columns":
            raise InvalidArgumentError("target columns are not gap-free")
        return self._translate_subset_elementwise((r, a, b), m, k)

    def _translate_subset_columns(self, x, m, k):
        r, a, b = x
        colsS, minS, maxS, _ = self.col_stats(m)
        colsT, minT, maxT, _ = self.col_stats(m + k)
        bu = (colsS & 0xFF) - 128
        au = (colsS >> 8) - 128
        a2 = au + a
        b2 = bu + b
        packable = (np.abs(a2) <= 127) & (np.abs(b2) <= 127)
        tcols = ((a2 + 128) << 8) | (b2 + 128)
        pos = np.searchsorted(colsT, tcols)
        posc = np.minimum(pos, max(len(colsT) - 1, 0))
        present = packable & (pos < len(colsT)) & (colsT[posc] == tcols)
        shift = r + a * bu
        lo = minS + shift
        hi = maxS + shift
        bad = np.where(present, (lo < minT[posc]) | (hi > maxT[posc]), True)
        idx = np.nonzero(bad)[0]
        if len(idx) == 0:
            return True, None
        i = int(idx[0])
        if present[i] and lo[i] < minT[posc[i]]:
            ru = int(minS[i])
        else:
            ru = int(maxS[i])
        witness = (ru, int(au[i]), int(bu[i]))
        self._assert_witness(witness, x, m, k)
        return False, witness

    def _translate_subset_elementwise(self, x, m, k):
        # scan top level first: failures concentrate at extremal elements
        for j in range(m, -1, -1):
            miss = _impl.translate_miss(self.levels[j], x, self.level_of,
                                        self.M, m + k)
            if miss != -1:
                witness = tuple(int(v) for v in unpack_keys(
                    self.levels[j][miss:miss + 1])[0])
                self._assert_witness(witness, x, m, k)
                return False, witness
        return True, None

    def _assert_witness(self, u, x, m, k):
        lev_u = self.level_first(u)
        assert lev_u is not None and lev_u <= m, "witness not in S^m"
        prod = (u[0] + x[0] + x[1] * u[2], u[1] + x[1], u[2] + x[2])
        lev_p = self.level_first(prod)
        assert lev_p is None or lev_p > m + k, "witness product inside ball"


def build_heis_ball(M: int, element_cap: int = DEFAULT_ELEMENT_CAP,
                    backend: str | None = None) -> HeisBall:
    """Enumerate S^0..S^M for the standard support, respecting the cap."""
    if not 0 <= M <= MAX_DEPTH:
        raise InvalidArgumentError(f"depth must be in [0, {MAX_DEPTH}]")
    impl = {None: _impl, "auto": _impl, BACKEND: _impl,
            "numpy": _np_impl}.get(backend, None)
    if impl is None:
        raise InvalidArgumentError(f"backend {backend!r} unavailable")
    if M ** 4 // 24 > element_cap:  # provable lower bound on |S^M|
        raise ResourceCapError(
            f"ball of depth {M} exceeds element cap {element_cap}",
            partial={"complete_depth": -1, "elements": None})
    levels, level_of = impl.build_levels(M)
    total = sum(len(lv) for lv in levels)
    if total > element_cap:
        # report the largest complete depth that fits under the cap
        acc, depth = 0, -1
        for j, lv in enumerate(levels):
            acc += len(lv)
            if acc > element_cap:
                break
            depth = j
        raise ResourceCapError(
            f"ball of depth {M} has {total} elements, over cap {element_cap}",
            partial={"complete_depth": depth, "elements": total})
    name = "numpy" if impl is _np_impl else BACKEND
    return HeisBall(M, levels, level_of, name)

"""Vectorized fallback kernel for Heisenberg ball growth.

Same contract as the compiled module ``_heiskern``; selected by
``conewalk.kernel`` when the extension is unavailable.

Packed representation: an element z^r g^a h^b becomes the int64

    key = ((r + R_OFF) << 16) | ((a + 128) << 8) | (b + 128)

so keys sort by (r, a, b) and the low 16 bits identify the (a, b) column.
The dense occupancy table maps a flat (r, a, b) index to the first level at
which the element appears (255 = absent); its bounds are wide enough for
every candidate generated during growth, but lookups still bounds-check.
"""

from __future__ import annotations

import numpy as np

R_OFF = 1 << 44
ABSENT = 255


def table_dims(M: int) -> tuple[int, int]:
    """(R_LIM, AB_LIM): the dense table covers |r|<=R_LIM, |a|,|b|<=AB_LIM."""
    return (M * M) // 4 + M + 8, M + 2


def _flat_index(r, a, b, r_lim: int, ab_lim: int):
    da = 2 * ab_lim + 1
    return ((r + r_lim) * da + (a + ab_lim)) * da + (b + ab_lim)


def _keys_to_flat(keys, r_lim: int, ab_lim: int):
    r = (keys >> 16) - R_OFF
    a = ((keys >> 8) & 0xFF) - 128
    b = (keys & 0xFF) - 128
    return _flat_index(r, a, b, r_lim, ab_lim)


def build_levels(M: int):
    """Grow S^M for S = {1, g, g^-1, h, h^-1} by frontier expansion.

    Returns (levels, level_of): ``levels[m]`` holds the sorted packed keys new
    at level m, ``level_of`` the dense uint8 occupancy table.
    """
    r_lim, ab_lim = table_dims(M)
    da = 2 * ab_lim + 1
    level_of = np.full((2 * r_lim + 1) * da * da, ABSENT, dtype=np.uint8)

    ident = np.array([(R_OFF << 16) | (128 << 8) | 128], dtype=np.int64)
    level_of[_keys_to_flat(ident, r_lim, ab_lim)] = 0
    levels = [ident]
    frontier = ident
    for m in range(1, M + 1):
        a = ((frontier >> 8) & 0xFF) - 128
        h_step = (a << 16) + 1
        cand = np.concatenate([
            frontier + (1 << 8),
            frontier - (1 << 8),
            frontier + h_step,
            frontier - h_step,
        ])
        cand = np.unique(cand)
        flat = _keys_to_flat(cand, r_lim, ab_lim)
        fresh = cand[level_of[flat] == ABSENT]
        level_of[_keys_to_flat(fresh, r_lim, ab_lim)] = m
        levels.append(fresh)
        frontier = fresh
    return levels, level_of


def lookup_levels(triples, level_of, M: int):
    """Vectorized first-appearance level of (r,a,b) rows; 255 where absent."""
    r_lim, ab_lim = table_dims(M)
    r, a, b = triples[:, 0], triples[:, 1], triples[:, 2]
    inb = (np.abs(r) <= r_lim) & (np.abs(a) <= ab_lim) & (np.abs(b) <= ab_lim)
    flat = _flat_index(r, a, b, r_lim, ab_lim)
    out = np.full(len(triples), ABSENT, dtype=np.uint8)
    out[inb] = level_of[flat[inb]]
    return out


def translate_miss(keys, x, level_of, M: int, max_level: int,
                   chunk: int = 1 << 16) -> int:
    """First index i with keys[i]*x outside S^max_level, or -1 if none.

    ``keys`` are packed elements (right-multiplied by the triple x); searched
    in order, chunked to bound temporary memory.
    """
    r, a, b = x
    r_lim, ab_lim = table_dims(M)
    da = 2 * ab_lim + 1
    for base in range(0, len(keys), chunk):
        part = keys[base:base + chunk]
        bu = (part & 0xFF) - 128
        au = ((part >> 8) & 0xFF) - 128
        ru = (part >> 16) - R_OFF
        r2 = ru + r + a * bu
        a2 = au + a
        b2 = bu + b
        inb = (np.abs(r2) <= r_lim) & (np.abs(a2) <= ab_lim) & (np.abs(b2) <= ab_lim)
        flat = ((r2 + r_lim) * da + (a2 + ab_lim)) * da + (b2 + ab_lim)
        lev = np.full(len(part), ABSENT, dtype=np.uint8)
        lev[inb] = level_of[flat[inb]]
        bad = np.nonzero(lev > max_level)[0]
        if len(bad):
            return base + int(bad[0])
    return -1

# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel for Heisenberg ball growth (see _heiskern_np for the
reference semantics; the two modules are drop-in replacements).

Key layout: ((r + R_OFF) << 16) | ((a + 128) << 8) | (b + 128).
"""

import numpy as np

cimport numpy as cnp

cnp.import_array()

R_OFF = 1 << 44
ABSENT = 255

cdef long long C_R_OFF = 1 << 44
cdef int C_ABSENT = 255


def table_dims(int M):
    return (M * M) // 4 + M + 8, M + 2


cdef inline long long _flat(long long r, long long a, long long b,
                            long long r_lim, long long ab_lim, long long da) nogil:
    return ((r + r_lim) * da + (a + ab_lim)) * da + (b + ab_lim)


def build_levels(int M):
    cdef long long r_lim = (M * M) // 4 + M + 8
    cdef long long ab_lim = M + 2
    cdef long long da = 2 * ab_lim + 1

    level_of = np.full((2 * r_lim + 1) * da * da, ABSENT, dtype=np.uint8)
    cdef unsigned char[::1] tab = level_of

    cdef long long ident = (C_R_OFF << 16) | (128 << 8) | 128
    tab[_flat(0, 0, 0, r_lim, ab_lim, da)] = 0

    levels = [np.array([ident], dtype=np.int64)]
    frontier = levels[0]

    cdef long long[::1] fr
    cdef long long[::1] out
    cdef long long key, r, a, b, nr, nb
    cdef long long idx
    cdef Py_ssize_t i, n, nout
    cdef int m, d
    cdef long long dr_[4]
    cdef long long da_[4]
    cdef long long db_[4]

    for m in range(1, M + 1):
        fr = frontier
        n = fr.shape[0]
        buf = np.empty(4 * n, dtype=np.int64)
        out = buf
        nout = 0
        with nogil:
            for i in range(n):
                key = fr[i]
                b = (key & 0xFF) - 128
                a = ((key >> 8) & 0xFF) - 128
                r = (key >> 16) - C_R_OFF
                # neighbor steps: g, g^-1, h, h^-1 (left multiplication)
                dr_[0] = 0; da_[0] = 1; db_[0] = 0
                dr_[1] = 0; da_[1] = -1; db_[1] = 0
                dr_[2] = a; da_[2] = 0; db_[2] = 1
                dr_[3] = -a; da_[3] = 0; db_[3] = -1
                for d in range(4):
                    nr = r + dr_[d]
                    nb = b + db_[d]
                    idx = _flat(nr, a + da_[d], nb, r_lim, ab_lim, da)
                    if tab[idx] == C_ABSENT:
                        tab[idx] = m
                        out[nout] = ((nr + C_R_OFF) << 16) \
                            | (((a + da_[d]) + 128) << 8) | (nb + 128)
                        nout += 1
        fresh = np.sort(buf[:nout])
        levels.append(fresh)
        frontier = fresh
    return levels, level_of


def lookup_levels(triples, level_of, int M):
    cdef long long r_lim = (M * M) // 4 + M + 8
    cdef long long ab_lim = M + 2
    cdef long long da = 2 * ab_lim + 1
    cdef long long[:, ::1] t = np.ascontiguousarray(triples, dtype=np.int64)
    cdef unsigned char[::1] tab = level_of
    out = np.full(t.shape[0], ABSENT, dtype=np.uint8)
    cdef unsigned char[::1] o = out
    cdef Py_ssize_t i
    cdef long long r, a, b
    with nogil:
        for i in range(t.shape[0]):
            r = t[i, 0]; a = t[i, 1]; b = t[i, 2]
            if -r_lim <= r <= r_lim and -ab_lim <= a <= ab_lim and -ab_lim <= b <= ab_lim:
                o[i] = tab[_flat(r, a, b, r_lim, ab_lim, da)]
    return out


def translate_miss(keys, x, level_of, int M, int max_level, chunk=None):
    cdef long long r = x[0], a = x[1], b = x[2]
    cdef long long r_lim = (M * M) // 4 + M + 8
    cdef long long ab_lim = M + 2
    cdef long long da = 2 * ab_lim + 1
    cdef long long[::1] ks = keys
    cdef unsigned char[::1] tab = level_of
    cdef Py_ssize_t i, n = ks.shape[0]
    cdef long long key, ru, au, bu, r2, a2, b2
    cdef int lev
    with nogil:
        for i in range(n):
            key = ks[i]
            bu = (key & 0xFF) - 128
            au = ((key >> 8) & 0xFF) - 128
            ru = (key >> 16) - C_R_OFF
            r2 = ru + r + a * bu
            a2 = au + a
            b2 = bu + b
            if -r_lim <= r2 <= r_lim and -ab_lim <= a2 <= ab_lim and -ab_lim <= b2 <= ab_lim:
                lev = tab[_flat(r2, a2, b2, r_lim, ab_lim, da)]
            else:
                lev = C_ABSENT
            if lev > max_level:
                with gil:
                    return i
    return -1

"""Group descriptors and element arithmetic for the walk-support machinery.

Four element representations, all plain hashable values:

* free abelian rank d      -- tuple of d ints
* discrete Heisenberg      -- triple (r, a, b) in the normal form z^r g^a h^b,
                              with relations hg = zgh and z central
* free group on g, h       -- reduced word over "gGhH" (capital = inverse)
* Z x finite               -- pair (n, i), i an index into a multiplication
                              table validated at construction

The Heisenberg product in normal-form coordinates is

    (r1, a1, b1) * (r2, a2, b2) = (r1 + r2 + a2*b1, a1 + a2, b1 + b2)

obtained by pushing h^b1 past g^a2 (each exchange emits one z).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .errors import InvalidArgumentError

FREE_ABELIAN = "free_abelian"
HEISENBERG = "heisenberg"
FREE_GROUP_2 = "free_group_2"
Z_TIMES_FINITE = "z_times_finite"

_WORD_LETTERS = "gGhH"
_WORD_INVERSE = {"g": "G", "G": "g", "h": "H", "H": "h"}


class FiniteGroupTable:
    """Multiplication table of a finite group, validated on construction.

    ``table[i][j]`` is the index of element i * j.  Index 0 must be the
    identity.  Closure, identity, inverses and full associativity are checked;
    intended for small groups (the associativity check is O(n^3)).
    """

    def __init__(self, table: list[list[int]], names: list[str] | None = None):
        n = len(table)
        if n == 0 or any(len(row) != n for row in table):
            raise InvalidArgumentError("table must be square and nonempty")
        rng = range(n)
        if any(table[i][j] not in rng for i in rng for j in rng):
            raise InvalidArgumentError("table entries out of range")
        if any(table[0][j] != j or table[j][0] != j for j in rng):
            raise InvalidArgumentError("index 0 is not an identity")
        self._inv = [-1] * n
        for i in rng:
            for j in rng:
                if table[i][j] == 0:
                    self._inv[i] = j
        if any(v < 0 for v in self._inv):
            raise InvalidArgumentError("missing inverses")
        for i in rng:
            for j in rng:
                for k in rng:
                    if table[table[i][j]][k] != table[i][table[j][k]]:
                        raise InvalidArgumentError("table is not associative")
        self.table = [list(row) for row in table]
        self.n = n
        self.names = list(names) if names is not None else [str(i) for i in rng]
        if len(self.names) != n:
            raise InvalidArgumentError("names length mismatch")

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def inv(self, i: int) -> int:
        return self._inv[i]


def cyclic_table(n: int) -> FiniteGroupTable:
    """C_n with generator at index 1."""
    if n < 1:
        raise InvalidArgumentError("n must be positive")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    names = ["e"] + [f"c{i}" for i in range(1, n)]
    return FiniteGroupTable(table, names)


def symmetric3_table() -> FiniteGroupTable:
    """S_3 as permutations of {0,1,2}; composition (p*q)(x) = p(q(x)).

    Index 0 is the identity; use :func:`symmetric3_index` to locate specific
    permutations such as the 3-cycle or a transposition.
    """
    perms = [(0, 1, 2)] + sorted(p for p in itertools.permutations(range(3)) if p != (0, 1, 2))
    index = {p: i for i, p in enumerate(perms)}
    table = [
        [index[tuple(p[q[x]] for x in range(3))] for q in perms]
        for p in perms
    ]
    names = ["".join(map(str, p)) for p in perms]
    t = FiniteGroupTable(table, names)
    t.perms = perms
    return t


def symmetric3_index(table: FiniteGroupTable, perm: tuple[int, int, int]) -> int:
    return table.perms.index(tuple(perm))


@dataclass(frozen=True)
class GroupDescriptor:
    """Which group an element value belongs to; carries the table if finite."""

    kind: str
    rank: int = 0
    table: FiniteGroupTable | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.kind not in (FREE_ABELIAN, HEISENBERG, FREE_GROUP_2, Z_TIMES_FINITE):
            raise InvalidArgumentError(f"unknown group kind {self.kind!r}")
        if self.kind == FREE_ABELIAN and self.rank < 1:
            raise InvalidArgumentError("free abelian rank must be >= 1")
        if self.kind == Z_TIMES_FINITE and self.table is None:
            raise InvalidArgumentError("z_times_finite needs a table")


def free_abelian(rank: int) -> GroupDescriptor:
    return GroupDescriptor(FREE_ABELIAN, rank=rank)


def heisenberg() -> GroupDescriptor:
    return GroupDescriptor(HEISENBERG)


def free_group_2() -> GroupDescriptor:
    return GroupDescriptor(FREE_GROUP_2)


def z_times_finite(table: FiniteGroupTable) -> GroupDescriptor:
    return GroupDescriptor(Z_TIMES_FINITE, table=table)


def identity(desc: GroupDescriptor):
    if desc.kind == FREE_ABELIAN:
        return (0,) * desc.rank
    if desc.kind == HEISENBERG:
        return (0, 0, 0)
    if desc.kind == FREE_GROUP_2:
        return ""
    return (0, 0)


def validate(desc: GroupDescriptor, x) -> None:
    """Raise InvalidArgumentError unless x is a well-formed element."""
    kind = desc.kind
    if kind == FREE_ABELIAN:
        if not (isinstance(x, tuple) and len(x) == desc.rank
                and all(isinstance(v, int) for v in x)):
            raise InvalidArgumentError(f"bad lattice element {x!r}")
    elif kind == HEISENBERG:
        if not (isinstance(x, tuple) and len(x) == 3
                and all(isinstance(v, int) for v in x)):
            raise InvalidArgumentError(f"bad Heisenberg element {x!r}")
    elif kind == FREE_GROUP_2:
        if not isinstance(x, str) or any(c not in _WORD_LETTERS for c in x):
            raise InvalidArgumentError(f"bad word {x!r}")
        if any(_WORD_INVERSE[a] == b for a, b in zip(x, x[1:])):
            raise InvalidArgumentError(f"word {x!r} is not reduced")
    else:
        if not (isinstance(x, tuple) and len(x) == 2
                and isinstance(x[0], int) and isinstance(x[1], int)
                and 0 <= x[1] < desc.table.n):
            raise InvalidArgumentError(f"bad z_times_finite element {x!r}")


def reduce_word(word: str) -> str:
    out: list[str] = []
    for c in word:
        if out and out[-1] == _WORD_INVERSE[c]:
            out.pop()
        else:
            out.append(c)
    return "".join(out)


def mul(desc: GroupDescriptor, x, y):
    kind = desc.kind
    if kind == FREE_ABELIAN:
        return tuple(a + b for a, b in zip(x, y))
    if kind == HEISENBERG:
        r1, a1, b1 = x
        r2, a2, b2 = y
        return (r1 + r2 + a2 * b1, a1 + a2, b1 + b2)
    if kind == FREE_GROUP_2:
        return reduce_word(x + y)
    return (x[0] + y[0], desc.table.mul(x[1], y[1]))


def inv(desc: GroupDescriptor, x):
    kind = desc.kind
    if kind == FREE_ABELIAN:
        return tuple(-a for a in x)
    if kind == HEISENBERG:
        r, a, b = x
        return (a * b - r, -a, -b)
    if kind == FREE_GROUP_2:
        return "".join(_WORD_INVERSE[c] for c in reversed(x))
    return (-x[0], desc.table.inv(x[1]))


def power(desc: GroupDescriptor, x, n: int):
    if n < 0:
        return power(desc, inv(desc, x), -n)
    acc = identity(desc)
    base = x
    while n:
        if n & 1:
            acc = mul(desc, acc, base)
        base = mul(desc, base, base)
        n >>= 1
    return acc


def canonical_key(desc: GroupDescriptor, x) -> str:
    """Stable injective text key, used for sorting and serialization."""
    if desc.kind == FREE_GROUP_2:
        return x
    return ",".join(str(v) for v in x)


def sort_key(desc: GroupDescriptor, x):
    """Total order compatible across runs (length-lexicographic for words)."""
    if desc.kind == FREE_GROUP_2:
        return (len(x), x)
    return x


# --- dihedral symmetries of the Heisenberg normal form ---------------------
#
# A symmetry is (e1, e2, s) acting as "signs, then optional swap":
#   signs: (r, a, b) -> (e1*e2*r, e1*a, e2*b)
#   swap:  (r, a, b) -> (a*b - r, b, a)        (exchanges g and h)
# Each of the 8 maps is a group automorphism.

D4_ALL = tuple(
    (e1, e2, s) for s in (0, 1) for e1 in (1, -1) for e2 in (1, -1)
)
D4_IDENTITY = (1, 1, 0)


def d4_apply(sym, t):
    e1, e2, s = sym
    r, a, b = t
    r, a, b = (e1 * e2 * r, e1 * a, e2 * b)
    if s:
        r, a, b = (a * b - r, b, a)
    return (r, a, b)


def d4_compose(outer, inner):
    """Symmetry applying ``inner`` first, then ``outer``."""
    e1o, e2o, so = outer
    e1i, e2i, si = inner
    if si:
        e1o, e2o = e2o, e1o
    return (e1o * e1i, e2o * e2i, so ^ si)


def d4_inverse(sym):
    for cand in D4_ALL:
        if d4_compose(cand, sym) == D4_IDENTITY:
            return cand
    raise AssertionError("unreachable")


def d4_orbit(t) -> set:
    return {d4_apply(sym, t) for sym in D4_ALL}


# --- named elements and preset admissible sets ------------------------------

HEIS_G = (0, 1, 0)
HEIS_H = (0, 0, 1)
HEIS_Z = (1, 0, 0)


def heis_standard_support() -> list:
    """supp(1 + g + g^-1 + h + h^-1) in normal-form coordinates."""
    return [(0, 0, 0), (0, 1, 0), (0, -1, 0), (0, 0, 1), (0, 0, -1)]


def heis_quadrant_support() -> list:
    """supp(g + h): the positive-cone walk."""
    return [(0, 1, 0), (0, 0, 1)]

"""Realize a primitive 0-1 matrix as a stationary transition block on F2.

Given a k x k primitive 0-1 matrix B, set

    v_i = g^(2-i) h^(i-1)          (v_1 = g, v_2 = h, v_3 = g^-1 h^2, ...)
    w_ij = v_j g v_i^-1
    f = 1 + sum over B_ij = 1 of (w_ij + w_ij^-1)

in the free group on g, h.  Left multiplication by f sends the node
v_i g^(n-1) to v_j g^n exactly when B_ij = 1, and level-n elements outside
the node set never reach a level-(n+1) node, so the ordered node bases carry
the same matrix B at every level.

All words use the reduced-string representation of the group_core module.
Verification depth is capped by default: the ball of supp f in F2 grows
exponentially, and the per-level claim is uniform in n.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import groups, growth
from .errors import InvalidArgumentError, VerificationError

_F2 = groups.free_group_2()

DEFAULT_DEPTH_CAP = 5


def degree(word: str) -> int:
    """Total degree: each of g, h counts +1, each inverse letter -1."""
    return sum(1 if c.islower() else -1 for c in word)


def _v_word(i: int) -> str:
    # v_i = g^(2-i) h^(i-1); the concatenation is already reduced.
    e = 2 - i
    head = "g" * e if e > 0 else "G" * (-e)
    return head + "h" * (i - 1)


@dataclass(frozen=True)
class RealizationSpec:
    matrix: tuple[tuple[int, ...], ...]
    v_words: tuple[str, ...]
    w_words: tuple[tuple[str, ...], ...]
    support: frozenset[str]
    primitivity_exponent: int

    @property
    def k(self) -> int:
        return len(self.matrix)

    def support_sorted(self) -> tuple[str, ...]:
        return tuple(sorted(self.support, key=lambda w: (len(w), w)))


def _coerce_matrix(B) -> tuple[tuple[int, ...], ...]:
    try:
        rows = tuple(tuple(int(v) for v in row) for row in B)
    except (TypeError, ValueError) as exc:
        raise InvalidArgumentError(f"bad matrix: {exc}") from exc
    k = len(rows)
    if k == 0 or any(len(row) != k for row in rows):
        raise InvalidArgumentError("matrix must be square and nonempty")
    if any(v not in (0, 1) for row in rows for v in row):
        raise InvalidArgumentError("matrix entries must be 0 or 1")
    return rows


def _primitivity_exponent(rows: tuple[tuple[int, ...], ...]) -> int:
    """Least e <= (k-1)^2 + 1 with B^e entrywise positive, else raise."""
    k = len(rows)
    bound = (k - 1) ** 2 + 1
    power = rows
    for e in range(1, bound + 1):
        if all(v > 0 for row in power for v in row):
            return e
        power = tuple(
            tuple(
                min(1, sum(power[i][t] * rows[t][j] for t in range(k)))
                for j in range(k)
            )
            for i in range(k)
        )
    raise InvalidArgumentError(
        f"matrix is not primitive (no positive power up to exponent {bound})"
    )


def build(B) -> RealizationSpec:
    """Validate B, derive the words, and verify the 0/1-coefficient claims."""
    rows = _coerce_matrix(B)
    k = len(rows)
    if k < 2:
        raise InvalidArgumentError(
            "need k >= 2: a 1x1 matrix yields f = 1 + g + g^-1, whose "
            "support does not generate the free group"
        )
    exponent = _primitivity_exponent(rows)

    v_words = tuple(_v_word(i) for i in range(1, k + 1))
    w_words = tuple(
        tuple(
            groups.mul(_F2, v_words[j], groups.mul(_F2, "g", groups.inv(_F2, v_words[i])))
            for j in range(k)
        )
        for i in range(k)
    )

    flat = [w for row in w_words for w in row]
    with_inverses = flat + [groups.inv(_F2, w) for w in flat] + [""]
    if len(set(with_inverses)) != 2 * k * k + 1:
        raise VerificationError("w words, their inverses and 1 are not distinct")
    bad = [w for w in flat if degree(w) != 1]
    if bad:
        raise VerificationError(f"w words with total degree != 1: {bad[:3]}")

    support = {""}
    for i in range(k):
        for j in range(k):
            if rows[i][j]:
                support.add(w_words[i][j])
                support.add(groups.inv(_F2, w_words[i][j]))
    return RealizationSpec(
        matrix=rows,
        v_words=v_words,
        w_words=w_words,
        support=frozenset(support),
        primitivity_exponent=exponent,
    )


def admissible_set(spec: RealizationSpec) -> growth.AdmissibleSet:
    return growth.AdmissibleSet.make(_F2, spec.support_sorted())


def grow_ball(spec: RealizationSpec, depth: int,
              element_cap: int = growth.DEFAULT_ELEMENT_CAP):
    return growth.grow(admissible_set(spec), depth, element_cap=element_cap)


def gamma_b(spec: RealizationSpec, n: int, ball=None) -> tuple[str, ...]:
    """The ordered node list (v_1 g^(n-1), ..., v_k g^(n-1)).

    Each node has total degree n, so it can never appear before level n;
    with a ball supplied this is verified.  First appearance at exactly
    level n holds when row 1 of B is all ones (then w_1i = v_i lies in
    supp f and path products reach every node); for other matrices some
    nodes enter the ball late, and node_first_levels reports where.
    """
    if n < 1:
        raise InvalidArgumentError(f"need n >= 1, got {n}")
    nodes = tuple(
        groups.mul(_F2, v, "g" * (n - 1)) for v in spec.v_words
    )
    if len(set(nodes)) != spec.k:
        raise VerificationError(f"node words at level {n} are not distinct")
    for node in nodes:
        if degree(node) != n:
            raise VerificationError(f"node {node!r} has degree != {n}")
    if ball is not None:
        for node in nodes:
            found = ball.word_length(node)
            if found is not None and found < n:
                raise VerificationError(
                    f"node {node!r} appears at level {found} < {n}"
                )
    return nodes


def node_first_levels(spec: RealizationSpec, ball, n: int) -> tuple:
    """First-appearance level of each level-n node in the ball (None if
    beyond the grown horizon)."""
    return tuple(ball.word_length(node) for node in gamma_b(spec, n))


def check_transition(spec: RealizationSpec, n: int, ball=None,
                     depth_cap: int = DEFAULT_DEPTH_CAP):
    """Matrix of left multiplication by f from level-n to level-(n+1) nodes.

    Entry (i, j) counts the letters of supp f carrying v_i g^(n-1) to
    v_j g^n.  Returns (matches B, matrix).
    """
    if n > depth_cap:
        raise InvalidArgumentError(f"n = {n} exceeds depth cap {depth_cap}")
    src = gamma_b(spec, n, ball)
    dst = gamma_b(spec, n + 1, ball)
    index = {node: j for j, node in enumerate(dst)}
    k = spec.k
    matrix = [[0] * k for _ in range(k)]
    for i in range(k):
        for beta in spec.support:
            j = index.get(groups.mul(_F2, beta, src[i]))
            if j is not None:
                matrix[i][j] += 1
    matrix = tuple(tuple(row) for row in matrix)
    return matrix == spec.matrix, matrix


def check_isolation(spec: RealizationSpec, n: int, ball,
                    depth_cap: int = DEFAULT_DEPTH_CAP) -> bool:
    """True iff no level-n element outside the node set reaches a
    level-(n+1) node under any letter of supp f."""
    if n > depth_cap:
        raise InvalidArgumentError(f"n = {n} exceeds depth cap {depth_cap}")
    nodes_n = set(gamma_b(spec, n, ball))
    nodes_next = set(gamma_b(spec, n + 1, ball))
    for gamma in ball.gamma(n):
        if gamma in nodes_n:
            continue
        for beta in spec.support:
            if groups.mul(_F2, beta, gamma) in nodes_next:
                return False
    return True


def w_products(spec: RealizationSpec, n: int) -> frozenset[str]:
    """All products of exactly n letters w_ij with B_ij = 1."""
    letters = [
        spec.w_words[i][j]
        for i in range(spec.k)
        for j in range(spec.k)
        if spec.matrix[i][j]
    ]
    out = {""}
    for _ in range(n):
        out = {groups.mul(_F2, w, x) for w in letters for x in out}
    return frozenset(out)


def degree_slice(ball, n: int) -> frozenset[str]:
    """Elements of Gamma_n with total degree n (the maximal degree there)."""
    return frozenset(x for x in ball.gamma(n) if degree(x) == n)


def admissibility_evidence(spec: RealizationSpec, j_max: int = 3) -> dict:
    """Smallest j <= j_max with each standard letter in supp f^j, else None."""
    targets = {"g": None, "h": None, "G": None, "H": None}
    level = {""}
    for j in range(1, j_max + 1):
        level = {groups.mul(_F2, beta, x) for beta in spec.support for x in level}
        for letter in targets:
            if targets[letter] is None and letter in level:
                targets[letter] = j
    return targets

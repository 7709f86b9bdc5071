"""Second-order asymptotics for partition counts with bounded largest part.

For r -> infinity with t = k / sqrt(r) fixed, ln p2(r, k) is governed by a
scale function v(t) solving

    v(t)^2 = t^2 * integral_0^v x / (e^x - 1) dx,

through the three-term expansion ln p2 ~ ln f(t) - ln r + sqrt(r) g(t).
The sign of the sqrt(r) term is resolved once against exact counts rather
than trusted from transcription.
"""

from __future__ import annotations

import functools
import math

from . import partitions
from .errors import InvalidArgumentError

_TOL = 1e-12


def _phi(x: float) -> float:
    """x / (e^x - 1), continuously extended by phi(0) = 1."""
    if abs(x) < 1e-12:
        return 1.0 - x / 2.0
    return x / math.expm1(x)


def _simpson(f, a: float, b: float, fa: float, fm: float, fb: float) -> float:
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb)


def _adaptive(f, a, b, fa, fm, fb, whole, tol, depth):
    m = 0.5 * (a + b)
    lm, rm = 0.5 * (a + m), 0.5 * (m + b)
    flm, frm = f(lm), f(rm)
    left = _simpson(f, a, m, fa, flm, fm)
    right = _simpson(f, m, b, fm, frm, fb)
    if depth <= 0 or abs(left + right - whole) <= 15.0 * tol:
        return left + right + (left + right - whole) / 15.0
    return (_adaptive(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1)
            + _adaptive(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1))


def integrate(f, a: float, b: float, tol: float = _TOL) -> float:
    """Adaptive Simpson quadrature to absolute tolerance tol."""
    if b < a:
        return -integrate(f, b, a, tol)
    if a == b:
        return 0.0
    fa, fb = f(a), f(b)
    m = 0.5 * (a + b)
    fm = f(m)
    whole = _simpson(f, a, b, fa, fm, fb)
    return _adaptive(f, a, b, fa, fm, fb, whole, tol, 48)


def _scale_integral(v: float) -> float:
    return integrate(_phi, 0.0, v)


@functools.lru_cache(maxsize=4096)
def v_of(t: float) -> float:
    """The positive solution of v^2 = t^2 * integral_0^v phi.

    Bisection brackets the nonzero root away from the degenerate v = 0,
    then safeguarded Newton with G'(v) = 2v - t^2 phi(v) polishes it.
    """
    if t <= 0:
        raise InvalidArgumentError("need t > 0")

    def G(v):
        return v * v - t * t * _scale_integral(v)

    lo = t * t * 1e-6
    hi = t * math.pi / math.sqrt(6.0) + 1.0
    if not (G(lo) < 0 < G(hi)):
        raise InvalidArgumentError(f"failed to bracket the root for t={t}")
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        if G(mid) < 0:
            lo = mid
        else:
            hi = mid
        if hi - lo < 1e-9 * (1.0 + hi):
            break
    v = 0.5 * (lo + hi)
    for _ in range(24):
        g = G(v)
        dg = 2.0 * v - t * t * _phi(v)
        if dg == 0:
            break
        step = g / dg
        nv = v - step
        if not lo <= nv <= hi:
            nv = 0.5 * (lo + hi)
        if G(nv) < 0:
            lo = nv
        else:
            hi = nv
        v = nv
        if abs(step) < 1e-14 * (1.0 + v):
            break
    return v


def v_tilde(alpha: float) -> float:
    """Exponent of the ray-value limit: the multiplicative parameter of the
    limiting weight system is exp(-v_tilde(alpha)) for alpha = k/sqrt(r)."""
    return v_of(alpha)


def f_of(t: float) -> float:
    v = v_of(t)
    return (v / (t * math.sqrt(8.0 * math.pi))) \
        / math.sqrt(1.0 - math.exp(-v) * (1.0 + t * t / 2.0))


def g_of(t: float) -> float:
    v = v_of(t)
    return 2.0 * v / t - t * math.log1p(-math.exp(-v))


@functools.lru_cache(maxsize=1)
def calibrate(probes=((400, 20), (900, 30), (1600, 40))) -> int:
    """Resolve the sign of the sqrt(r) g(t) term against exact counts."""
    best_sigma, best_err = None, None
    for sigma in (1, -1):
        err = 0.0
        for r, k in probes:
            t = k / math.sqrt(r)
            approx = math.log(f_of(t)) - math.log(r) \
                + sigma * math.sqrt(r) * g_of(t)
            err += abs(math.log(partitions.p2(r, k)) - approx)
        if best_err is None or err < best_err:
            best_sigma, best_err = sigma, err
    return best_sigma


def log_p_asymptotic(r: int, k: int) -> float:
    """Three-term approximation of ln p2(r, k)."""
    if r < 1 or k < 1:
        raise InvalidArgumentError("need r, k >= 1")
    t = k / math.sqrt(r)
    sigma = calibrate()
    return math.log(f_of(t)) - math.log(r) + sigma * math.sqrt(r) * g_of(t)

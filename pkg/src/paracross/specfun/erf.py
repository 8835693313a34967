"""Complementary error function on the complex plane.

Maclaurin series for small |z| (mpmath-boosted in the cancellation band),
the classical asymptotic expansion e^{-z^2}/(sqrt(pi) z) Sum (-1)^k (2k-1)!!/(2z^2)^k
with optimal truncation for large |z|, and the reflection erfc(-z) = 2 - erfc(z)
for the left half-plane.
"""

from __future__ import annotations

import cmath
import math

import mpmath

from ..policy import ERFC_POLICY, EvalPolicy
from ._util import check_result, kahan_step, require_finite

_TWO_OVER_SQRTPI = 2.0 / math.sqrt(math.pi)


def _series_double(z: complex, tol: float, max_terms: int) -> complex:
    s, c = z, 0j
    term = z
    mz2 = -(z * z)
    for k in range(1, max_terms):
        term *= mz2 * (2 * k - 1) / (k * (2 * k + 1))
        s, c = kahan_step(s, c, term)
        if abs(term) <= tol * abs(s):
            break
    return 1.0 - _TWO_OVER_SQRTPI * s


def _series_mp(z: complex, dps: int, max_terms: int) -> complex:
    with mpmath.workdps(dps):
        zm = mpmath.mpc(z)
        s = zm
        term = zm
        mz2 = -(zm * zm)
        eps = mpmath.mpf(10) ** (-dps - 2)
        for k in range(1, max_terms):
            term *= mz2 * (2 * k - 1) / (k * (2 * k + 1))
            s += term
            if abs(term) <= eps * abs(s):
                break
        return complex(1 - 2 / mpmath.sqrt(mpmath.pi) * s)


def _asymptotic(z: complex, tol: float, max_terms: int) -> complex:
    inv2z2 = 1.0 / (2.0 * z * z)
    s = 1.0 + 0j
    term = 1.0 + 0j
    prev = math.inf
    for k in range(1, max_terms):
        term *= -(2 * k - 1) * inv2z2
        mag = abs(term)
        if mag >= prev:
            break
        s += term
        prev = mag
        if mag <= tol:
            break
    return cmath.exp(-z * z) / (math.sqrt(math.pi) * z) * s


def erfc(z: complex, policy: EvalPolicy | None = None) -> complex:
    """erfc(z) for complex z."""
    policy = policy or ERFC_POLICY
    z = require_finite(z)
    if z.real < 0.0:
        return 2.0 - erfc(-z, policy)
    r = abs(z)
    if r >= policy.asymptotic_switch_radius:
        out = _asymptotic(z, policy.series_tol, policy.max_terms)
    elif r <= policy.series_double_radius:
        out = _series_double(z, policy.series_tol, policy.max_terms)
    else:
        out = _series_mp(z, 22 + int(0.87 * r * r), policy.max_terms)
    return check_result(out, f"erfc({z!r})")

"""Shared numeric helpers for the special-function kernels."""

from __future__ import annotations

import cmath
import math


def require_finite(z: complex, name: str = "z") -> complex:
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ValueError(f"{name} must be finite, got {z!r}")
    return z


def check_result(w: complex, context: str) -> complex:
    """Reject overflow instead of returning inf/nan silently."""
    if not (math.isfinite(w.real) and math.isfinite(w.imag)):
        raise OverflowError(f"{context}: result overflowed double range")
    return w


def kahan_step(s: complex, c: complex, x: complex) -> tuple[complex, complex]:
    """One compensated-summation update; returns (sum, compensation)."""
    y = x - c
    t = s + y
    c = (t - s) - y
    return t, c


def principal_power(z: complex, p: complex) -> complex:
    """z**p on the principal branch, with 0**p = 0 for Re p > 0."""
    if z == 0:
        return 0.0 + 0.0j
    return cmath.exp(p * cmath.log(z))

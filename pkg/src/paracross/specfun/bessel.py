"""Bessel functions J_nu of the fractional orders +-1/6 and +-5/6.

Power series below |z| = 12, Hankel large-argument expansion (optimally
truncated) beyond, continuous at the crossover to better than 1e-8.  The
fractional power z**nu uses the principal branch; on the negative real axis a
branch side must be supplied explicitly.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction

from ..errors import BranchError
from ..policy import BESSEL_POLICY, EvalPolicy
from ._util import check_result, kahan_step, require_finite

_SUPPORTED = {
    Fraction(1, 6): math.gamma(7.0 / 6.0),
    Fraction(-1, 6): math.gamma(5.0 / 6.0),
    Fraction(5, 6): math.gamma(11.0 / 6.0),
    Fraction(-5, 6): math.gamma(1.0 / 6.0),
}


def _normalize_order(order) -> Fraction:
    if isinstance(order, Fraction):
        frac = order
    else:
        frac = Fraction(round(float(order) * 6), 6)
        if abs(float(frac) - float(order)) > 1e-12:
            raise ValueError(f"unsupported order {order!r}")
    if frac not in _SUPPORTED:
        raise ValueError(f"order must be one of +-1/6, +-5/6, got {order!r}")
    return frac


def _log_half_z(z: complex, side: int | None) -> complex:
    """log(z/2) with explicit branch side on the negative real axis."""
    if z.imag == 0.0 and z.real < 0.0:
        if side is None:
            raise BranchError(
                "bessel_j on the negative real axis requires side=+1 or side=-1")
        return math.log(-z.real / 2.0) + 1j * math.pi * (1 if side > 0 else -1)
    return cmath.log(z / 2.0)


def _series(nu: float, gamma_nu1: float, z: complex, side, tol, max_terms) -> complex:
    pref = cmath.exp(nu * _log_half_z(z, side)) / gamma_nu1
    q = -(z * z) / 4.0
    s, c = 1.0 + 0j, 0j
    term = 1.0 + 0j
    for k in range(1, max_terms):
        term *= q / (k * (k + nu))
        s, c = kahan_step(s, c, term)
        if abs(term) <= tol * abs(s):
            break
    return pref * s


def _hankel(nu: float, z: complex, tol: float, max_terms: int) -> complex:
    """Large-argument expansion, |arg z| <= pi/2 assumed."""
    omega = z - (0.5 * nu + 0.25) * math.pi
    p = 1.0 + 0j
    q = 0j
    c = 1.0 + 0j
    four_nu2 = 4.0 * nu * nu
    prev = math.inf
    for k in range(1, max_terms):
        c *= (four_nu2 - (2 * k - 1) ** 2) / (8.0 * k * z)
        mag = abs(c)
        if mag >= prev:
            break
        sign = -1.0 if (k // 2) % 2 else 1.0
        if k % 2:
            q += sign * c
        else:
            p += sign * c
        prev = mag
        if mag <= tol:
            break
    return cmath.sqrt(2.0 / (math.pi * z)) * (p * cmath.cos(omega) - q * cmath.sin(omega))


def bessel_j(order, z: complex, *, side: int | None = None,
             policy: EvalPolicy | None = None) -> complex:
    """J_order(z) for order in {+-1/6, +-5/6} and complex z.

    ``side`` picks the branch (arg z = +pi or -pi) when z lies on the negative
    real axis; elsewhere the principal branch is used and ``side`` is ignored.
    """
    policy = policy or BESSEL_POLICY
    z = require_finite(z)
    frac = _normalize_order(order)
    nu = float(frac)
    if z == 0:
        if nu > 0:
            return 0.0 + 0.0j
        raise OverflowError(f"J_{nu} diverges at z=0")
    if abs(z) < policy.asymptotic_switch_radius:
        out = _series(nu, _SUPPORTED[frac], z, side, policy.series_tol,
                      policy.max_terms)
        return check_result(out, f"bessel_j({nu}, {z!r})")
    # reduce to |arg| <= pi/2, then rotate back: J_nu(z e^{i m pi}) = e^{i m nu pi} J_nu(z)
    theta = cmath.phase(z)
    if z.imag == 0.0 and z.real < 0.0:
        if side is None:
            raise BranchError(
                "bessel_j on the negative real axis requires side=+1 or side=-1")
        theta = math.pi if side > 0 else -math.pi
    if theta > math.pi / 2:
        zt = -z
        factor = cmath.exp(1j * math.pi * nu)
    elif theta < -math.pi / 2:
        zt = -z
        factor = cmath.exp(-1j * math.pi * nu)
    else:
        zt = z
        factor = 1.0 + 0j
    out = factor * _hankel(nu, zt, policy.series_tol, policy.max_terms)
    return check_result(out, f"bessel_j({nu}, {z!r})")

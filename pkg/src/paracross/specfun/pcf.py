"""Parabolic cylinder functions U(a, z) and D_n(z) for complex order and argument.

The series region solves y'' = (a + z^2/4) y by its Taylor recurrence from the
exact origin values

    U(a, 0)  =  sqrt(pi) 2^(-a/2-1/4) / Gamma(3/4 + a/2)
    U'(a, 0) = -sqrt(pi) 2^(-a/2+1/4) / Gamma(1/4 + a/2)

with mpmath escalation where the two basis pieces cancel beyond double
precision.  Past the switch radius the two-branch asymptotic expansion is
used: the single recessive series for |arg z| <= pi/2, plus the subdominant
companion term (switched on across the Stokes lines arg z = +-pi/2)

    D_n(z) ~ e^{-z^2/4} z^n Sum_k (-n)_{2k} / (k! (-2 z^2)^k)
             - sqrt(2 pi) e^{+-i pi n}/Gamma(-n) e^{z^2/4} z^{-n-1}
               Sum_k (n+1)_{2k} / (k! (2 z^2)^k)

with the upper sign for arg z > 0 and the lower for arg z < 0; on the negative
real axis the two choices differ by a Stokes jump and a side must be given.
D_n and U are the same function under n = -a - 1/2.
"""

from __future__ import annotations

import cmath
import math

import mpmath
from scipy.special import rgamma

from ..errors import SectorError
from ..policy import PCF_POLICY, EvalPolicy
from ._util import check_result, kahan_step, require_finite

_SQRT_PI = math.sqrt(math.pi)
_SQRT_2PI = math.sqrt(2.0 * math.pi)
_LOG2 = math.log(2.0)


def _origin_values(a: complex) -> tuple[complex, complex]:
    u0 = _SQRT_PI * cmath.exp(-(0.5 * a + 0.25) * _LOG2) * complex(rgamma(0.75 + 0.5 * a))
    u0p = -_SQRT_PI * cmath.exp(-(0.5 * a - 0.25) * _LOG2) * complex(rgamma(0.25 + 0.5 * a))
    return u0, u0p


def _series_pair_double(a: complex, z: complex, tol: float, max_terms: int):
    """(U, U') by the Taylor recurrence c_m = (a c_{m-2} + c_{m-4}/4)/((m-1) m)."""
    u0, u0p = _origin_values(a)
    # independent even/odd bases: w1(0)=1, w1'(0)=0 and w2(0)=0, w2'(0)=1
    ce = [1.0 + 0j, 0j, 0.5 * a]    # w1 coefficients c_0..c_2
    co = [0j, 1.0 + 0j, 0j]         # w2
    w1 = ce[0] + ce[2] * z * z
    w1p = 2.0 * ce[2] * z
    w2 = z
    w2p = 1.0 + 0j
    w1_c = w1p_c = w2_c = w2p_c = 0j
    zpow = z * z                    # z^(m-1) for m = 3
    for m in range(3, max_terms):
        ne = (a * ce[m - 2] + (0.25 * ce[m - 4] if m >= 4 else 0j)) / ((m - 1) * m)
        no = (a * co[m - 2] + (0.25 * co[m - 4] if m >= 4 else 0j)) / ((m - 1) * m)
        ce.append(ne)
        co.append(no)
        te = ne * zpow * z
        to = no * zpow * z
        w1, w1_c = kahan_step(w1, w1_c, te)
        w2, w2_c = kahan_step(w2, w2_c, to)
        w1p, w1p_c = kahan_step(w1p, w1p_c, m * ne * zpow)
        w2p, w2p_c = kahan_step(w2p, w2p_c, m * no * zpow)
        zpow *= z
        if max(abs(te), abs(to)) <= tol * max(abs(w1), abs(w2), 1e-300):
            break
    return u0 * w1 + u0p * w2, u0 * w1p + u0p * w2p


def _series_pair_mp(a: complex, z: complex, dps: int, max_terms: int):
    with mpmath.workdps(dps):
        am = mpmath.mpc(a)
        zm = mpmath.mpc(z)
        quarter = mpmath.mpf(1) / 4
        u0 = mpmath.sqrt(mpmath.pi) * mpmath.power(2, -(am / 2 + quarter)) \
            * mpmath.rgamma(3 * quarter + am / 2)
        u0p = -mpmath.sqrt(mpmath.pi) * mpmath.power(2, -(am / 2 - quarter)) \
            * mpmath.rgamma(quarter + am / 2)
        ce = [mpmath.mpc(1), mpmath.mpc(0), am / 2]
        co = [mpmath.mpc(0), mpmath.mpc(1), mpmath.mpc(0)]
        w1 = ce[0] + ce[2] * zm * zm
        w1p = 2 * ce[2] * zm
        w2 = zm
        w2p = mpmath.mpc(1)
        zpow = zm * zm
        eps = mpmath.mpf(10) ** (-dps - 2)
        for m in range(3, max_terms):
            ne = (am * ce[m - 2] + (ce[m - 4] / 4 if m >= 4 else 0)) / ((m - 1) * m)
            no = (am * co[m - 2] + (co[m - 4] / 4 if m >= 4 else 0)) / ((m - 1) * m)
            ce.append(ne)
            co.append(no)
            te = ne * zpow * zm
            to = no * zpow * zm
            w1 += te
            w2 += to
            w1p += m * ne * zpow
            w2p += m * no * zpow
            zpow *= zm
            if max(abs(te), abs(to)) <= eps * max(abs(w1), abs(w2)):
                break
        return (complex(u0 * w1 + u0p * w2), complex(u0 * w1p + u0p * w2p))


def _asym_pair(a: complex, z: complex, side: int | None, tol: float, max_terms: int):
    """(U, U') from the two-branch large-|z| expansion."""
    n = -a - 0.5
    theta = cmath.phase(z)
    on_negative_axis = z.imag == 0.0 and z.real < 0.0
    z2 = z * z
    logz = cmath.log(z) if not on_negative_axis else (
        math.log(-z.real) + 1j * math.pi * (1 if (side or 0) > 0 else -1))

    def branch_sum(x0: complex, q: complex):
        # Sum_k (x0)_{2k} / (k! q^k) with optimal truncation; also d/dz factor sum
        s = 1.0 + 0j
        ds = 0j
        term = 1.0 + 0j
        poch = x0
        prev = math.inf
        for k in range(1, max_terms):
            term *= poch * (poch + 1.0) / (k * q)
            poch += 2.0
            mag = abs(term)
            if mag >= prev:
                break
            s += term
            ds += -2.0 * k * term / z
            prev = mag
            if mag <= tol:
                break
        return s, ds

    s1, ds1 = branch_sum(-n, -2.0 * z2)
    e1 = cmath.exp(-0.25 * z2 + n * logz)
    f1 = e1 * s1
    f1p = e1 * ((-0.5 * z + n / z) * s1 + ds1)
    if abs(theta) <= 0.5 * math.pi and not on_negative_axis:
        return f1, f1p
    if on_negative_axis and side is None:
        raise SectorError(
            "pcf asymptotics on the negative real axis (Stokes line) need side=+1 or -1")
    sgn = 1.0 if (theta > 0 or (on_negative_axis and side and side > 0)) else -1.0
    s2, ds2 = branch_sum(n + 1.0, 2.0 * z2)
    coef = -_SQRT_2PI * cmath.exp(sgn * 1j * math.pi * n) * complex(rgamma(-n))
    e2 = cmath.exp(0.25 * z2 - (n + 1.0) * logz)
    f2 = coef * e2 * s2
    f2p = coef * e2 * ((0.5 * z - (n + 1.0) / z) * s2 + ds2)
    return f1 + f2, f1p + f2p


def pcf_u_pair(a: complex, z: complex, *, side: int | None = None,
               policy: EvalPolicy | None = None) -> tuple[complex, complex]:
    """(U(a,z), dU/dz) for complex order and argument."""
    policy = policy or PCF_POLICY
    a = require_finite(complex(a), "a")
    z = require_finite(z)
    r = abs(z)
    switch = max(policy.asymptotic_switch_radius, 2.6 * math.sqrt(1.0 + abs(a)))
    if r <= switch:
        if r <= policy.series_double_radius:
            u, up = _series_pair_double(a, z, policy.series_tol, policy.max_terms)
        else:
            dps = 22 + int(0.22 * r * r + 0.5 * abs(a))
            u, up = _series_pair_mp(a, z, dps, policy.max_terms)
    else:
        u, up = _asym_pair(a, z, side, policy.series_tol, policy.max_terms)
    check_result(u, f"pcf U({a!r}, {z!r})")
    check_result(up, f"pcf U'({a!r}, {z!r})")
    return u, up


def pcf(kind: str, a_or_n: complex, z: complex, *, side: int | None = None,
        policy: EvalPolicy | None = None) -> complex:
    """Parabolic cylinder function: kind 'U' gives U(a, z), kind 'D' gives D_n(z)."""
    if kind == "U":
        a = complex(a_or_n)
    elif kind == "D":
        a = -complex(a_or_n) - 0.5   # D_n = U(-n-1/2, z)
    else:
        raise ValueError(f"kind must be 'U' or 'D', got {kind!r}")
    return pcf_u_pair(a, z, side=side, policy=policy)[0]

"""Airy functions Ai, Bi and first derivatives on the complex plane.

Evaluation strategy:

* ``|z| < asymptotic_switch_radius``: Maclaurin series of the two power-series
  solutions of y'' = z y, Kahan-compensated in double precision; past
  ``series_double_radius`` the same series is summed in mpmath with working
  precision scaled to the cancellation bound exp(2|zeta|), zeta = (2/3)z^(3/2).
* beyond the switch radius: optimally truncated asymptotic expansions.  Ai is
  expanded directly for |arg z| <= 2pi/3 and assembled from the rotation
  identity Ai(z) + w Ai(wz) + w^-1 Ai(z/w) = 0 (w = e^{2pi i/3}) near the
  negative axis, so every expansion is used only in its own sector.  Bi is
  assembled from Ai at rotated arguments, which is cancellation-free wherever
  Bi is not exponentially subdominant (it never is).

Accuracy inside |z| <= 20 is ~1e-12 relative or better away from zeros of the
function being evaluated.
"""

from __future__ import annotations

import cmath
import math

import mpmath

from ..policy import AIRY_POLICY, EvalPolicy
from ._util import check_result, kahan_step, require_finite

_AI0 = 0.35502805388781723926    # 3^(-2/3)/Gamma(2/3)
_AIP0 = -0.25881940379280679841  # -3^(-1/3)/Gamma(1/3)
_BI0 = 0.61492662744600073515    # 3^(-1/6)/Gamma(2/3)
_BIP0 = 0.44828835735382635791   # 3^(1/6)/Gamma(1/3)

_SQRTPI = math.sqrt(math.pi)
_TWO_THIRDS_PI = 2.0 * math.pi / 3.0
_ROT = cmath.exp(2j * math.pi / 3.0)   # e^{2 pi i/3}
_IROT = cmath.exp(-2j * math.pi / 3.0)

_KINDS = ("Ai", "Bi", "Ai'", "Bi'")
_KIND_ALIASES = {"Ai": 0, "Aip": 1, "Ai'": 1, "Bi": 2, "Bip": 3, "Bi'": 3}


def _series_sums_double(z: complex, tol: float, max_terms: int):
    """(f, f', g, g') for the basis solutions of y''=zy, plus max |term| seen."""
    z3 = z * z * z
    f_s, f_c = 1.0 + 0j, 0j
    fp_s, fp_c = 0j, 0j
    g_s, g_c = z, 0j
    gp_s, gp_c = 1.0 + 0j, 0j
    a = 1.0 + 0j          # f term,  k
    b = 0.5 * z * z       # f' term, k+1
    c = z                 # g term,  k
    d = 1.0 + 0j          # g' term, k
    peak = max(1.0, abs(z))
    for k in range(max_terms):
        a = a * z3 / ((3 * k + 2) * (3 * k + 3))
        c = c * z3 / ((3 * k + 3) * (3 * k + 4))
        d = d * z3 / ((3 * k + 1) * (3 * k + 3))
        f_s, f_c = kahan_step(f_s, f_c, a)
        fp_s, fp_c = kahan_step(fp_s, fp_c, b)
        g_s, g_c = kahan_step(g_s, g_c, c)
        gp_s, gp_c = kahan_step(gp_s, gp_c, d)
        m = max(abs(a), abs(b), abs(c), abs(d))
        peak = max(peak, m)
        b = b * z3 / ((3 * k + 3) * (3 * k + 5))
        if m <= tol * max(abs(f_s), abs(g_s), 1e-300):
            break
    return f_s, fp_s, g_s, gp_s, peak


def _series_all_mp(z: complex, dps: int, max_terms: int):
    with mpmath.workdps(dps):
        zm = mpmath.mpc(z)
        z3 = zm ** 3
        f_s = mpmath.mpc(1)
        fp_s = mpmath.mpc(0)
        g_s = zm
        gp_s = mpmath.mpc(1)
        a = mpmath.mpc(1)
        b = zm * zm / 2
        c = zm
        d = mpmath.mpc(1)
        eps = mpmath.mpf(10) ** (-dps - 2)
        for k in range(max_terms):
            a = a * z3 / ((3 * k + 2) * (3 * k + 3))
            c = c * z3 / ((3 * k + 3) * (3 * k + 4))
            d = d * z3 / ((3 * k + 1) * (3 * k + 3))
            f_s += a
            fp_s += b
            g_s += c
            gp_s += d
            m = max(abs(a), abs(b), abs(c), abs(d))
            b = b * z3 / ((3 * k + 3) * (3 * k + 5))
            if m <= eps * max(abs(f_s), abs(g_s)):
                break
        # connection constants at full working precision: the Ai combination
        # cancels ~exp(2|zeta|) between the f and g pieces
        third = mpmath.mpf(1) / 3
        ai0 = 3 ** (-2 * third) / mpmath.gamma(2 * third)
        aip0 = -(3 ** (-third)) / mpmath.gamma(third)
        rt3 = mpmath.sqrt(3)
        ai = ai0 * f_s + aip0 * g_s
        aip = ai0 * fp_s + aip0 * gp_s
        bi = rt3 * (ai0 * f_s - aip0 * g_s)
        bip = rt3 * (ai0 * fp_s - aip0 * gp_s)
        return (complex(ai), complex(aip), complex(bi), complex(bip))


def _series_all(z: complex, policy: EvalPolicy):
    r = abs(z)
    if r <= policy.series_double_radius:
        f, fp, g, gp = _series_sums_double(z, policy.series_tol, policy.max_terms)[:4]
        ai = _AI0 * f + _AIP0 * g
        aip = _AI0 * fp + _AIP0 * gp
        bi = math.sqrt(3.0) * (_AI0 * f - _AIP0 * g)
        bip = math.sqrt(3.0) * (_AI0 * fp - _AIP0 * gp)
        return ai, aip, bi, bip
    dps = 22 + int(0.6 * r ** 1.5)
    return _series_all_mp(z, dps, policy.max_terms)


def _ai_asym_direct(z: complex, tol: float, max_terms: int):
    """(Ai, Ai') by the large-|z| expansion; use only for |arg z| <= 2pi/3."""
    sq = cmath.sqrt(z)
    zeta = (2.0 / 3.0) * z * sq
    inv = 1.0 / zeta
    # u_k, v_k coefficient recurrences; optimal truncation at the smallest term
    s_u, s_v = 1.0 + 0j, 1.0 + 0j
    u = 1.0
    term_pow = 1.0 + 0j
    prev = math.inf
    for k in range(1, max_terms):
        u *= (6 * k - 5) * (6 * k - 3) * (6 * k - 1) / (216.0 * k * (2 * k - 1))
        v = u * (6 * k + 1) / (1.0 - 6 * k)
        term_pow *= -inv
        tu = u * term_pow
        mag = abs(tu)
        if mag >= prev:
            break
        s_u += tu
        s_v += v * term_pow
        prev = mag
        if mag <= tol * abs(s_u):
            break
    front = cmath.exp(-zeta) / (2.0 * _SQRTPI)
    z14 = cmath.exp(0.25 * cmath.log(z))
    ai = front / z14 * s_u
    aip = -front * z14 * s_v
    return ai, aip


def _ai_core(z: complex, policy: EvalPolicy):
    """(Ai, Ai') for |z| >= switch radius, sector-correct for any argument."""
    if abs(cmath.phase(z)) <= _TWO_THIRDS_PI + 1e-14:
        return _ai_asym_direct(z, policy.series_tol, policy.max_terms)
    a1, a1p = _ai_asym_direct(z * _IROT, policy.series_tol, policy.max_terms)
    a2, a2p = _ai_asym_direct(z * _ROT, policy.series_tol, policy.max_terms)
    ai = -_IROT * a1 - _ROT * a2
    aip = -_ROT * a1p - _IROT * a2p
    return ai, aip


def airy_all(z: complex, policy: EvalPolicy | None = None):
    """Return (Ai, Ai', Bi, Bi') at complex z."""
    policy = policy or AIRY_POLICY
    z = require_finite(z)
    if abs(z) < policy.asymptotic_switch_radius:
        ai, aip, bi, bip = _series_all(z, policy)
    else:
        ai, aip = _ai_core(z, policy)
        b1, b1p = _ai_core(z * _ROT, policy)
        b2, b2p = _ai_core(z * _IROT, policy)
        w = cmath.exp(1j * math.pi / 6.0)
        wp = cmath.exp(5j * math.pi / 6.0)
        bi = w * b1 + w.conjugate() * b2
        bip = wp * b1p + wp.conjugate() * b2p
    for val, name in ((ai, "Ai"), (aip, "Ai'"), (bi, "Bi"), (bip, "Bi'")):
        check_result(val, f"airy {name}({z!r})")
    return ai, aip, bi, bip


def airy(kind: str, z: complex, policy: EvalPolicy | None = None) -> complex:
    """Airy function of the given kind ('Ai', 'Bi', "Ai'", "Bi'") at complex z."""
    try:
        idx = _KIND_ALIASES[kind]
    except KeyError:
        raise ValueError(f"kind must be one of {_KINDS}, got {kind!r}") from None
    return airy_all(z, policy)[idx]

"""Generalized hypergeometric function 2F3.

The defining series converges for every finite argument (p < q + 1).  It is
summed in double precision with Kahan compensation; when the terms grow before
decaying (large negative argument, cancellation ~ exp(2 sqrt|z|)) the same sum
runs in mpmath with working precision scaled to the cancellation bound.  For
very large arguments the algebraic-plus-exponential expansion

    (prod Gamma(a) / prod Gamma(b)) 2F3(a; b; -w)
        ~ H(w) + E(w e^{-i pi}) + E(w e^{+i pi})

is used: E(y) = (2 pi)^{(p-q)/2} kappa^{-nu-1/2} e^{kappa y^{1/kappa}}
(kappa y^{1/kappa})^nu with kappa = q - p + 1 = 2 and
nu = sum(a) - sum(b) + (q-p)/2, and H(w) = sum_m Gamma(a_m)
(prod_{l != m} Gamma(a_l - a_m) / prod_l Gamma(b_l - a_m)) w^{-a_m}, both at
leading order.  Equal upper parameters (logarithmic case) are handled by an
infinitesimal deterministic parameter split, accurate to ~1e-5 there.
"""

from __future__ import annotations

import cmath
import math

import mpmath
from scipy.special import gamma as _cgamma, rgamma as _crgamma

from ..errors import ConvergenceError
from ..policy import HYP2F3_POLICY, EvalPolicy
from ._util import check_result, kahan_step, require_finite

_DEGENERATE_SPLIT = 1.37e-6


def term_ratio(a1, a2, b1, b2, b3, z, k: int) -> complex:
    """Ratio term_{k+1}/term_k of the defining series."""
    return z * (a1 + k) * (a2 + k) / ((k + 1) * (b1 + k) * (b2 + k) * (b3 + k))


def _check_params(bs) -> None:
    for b in bs:
        bb = complex(b)
        if bb.imag == 0.0 and bb.real <= 0.0 and bb.real == round(bb.real):
            raise ValueError(f"lower parameter {b!r} is a non-positive integer")


def _series_double(a1, a2, b1, b2, b3, z, tol, max_terms):
    s, c = 1.0 + 0j, 0j
    term = 1.0 + 0j
    small = 0
    for k in range(max_terms):
        term = term * term_ratio(a1, a2, b1, b2, b3, z, k)
        s, c = kahan_step(s, c, term)
        if abs(term) <= tol * max(abs(s), 1e-300):
            small += 1
            if small >= 2:
                return s
        else:
            small = 0
    raise ConvergenceError(f"2F3 series did not converge in {max_terms} terms")


def _series_mp(a1, a2, b1, b2, b3, z, dps, max_terms):
    with mpmath.workdps(dps):
        zm = mpmath.mpc(z)
        am1, am2 = mpmath.mpc(a1), mpmath.mpc(a2)
        bm1, bm2, bm3 = mpmath.mpc(b1), mpmath.mpc(b2), mpmath.mpc(b3)
        s = mpmath.mpc(1)
        term = mpmath.mpc(1)
        eps = mpmath.mpf(10) ** (-dps - 2)
        small = 0
        for k in range(max_terms):
            term = term * zm * (am1 + k) * (am2 + k) \
                / ((k + 1) * (bm1 + k) * (bm2 + k) * (bm3 + k))
            s += term
            if abs(term) <= eps * abs(s):
                small += 1
                if small >= 2:
                    return complex(s)
            else:
                small = 0
    raise ConvergenceError(f"2F3 series did not converge in {max_terms} terms")


def _asymptotic(a1, a2, b1, b2, b3, z):
    """Leading-order large-|z| form; z must not be on the positive real axis."""
    if abs(a2 - a1 - round((a2 - a1).real)) < 1e-9 and abs((a2 - a1).imag) < 1e-9:
        a2 = a2 + _DEGENERATE_SPLIT  # logarithmic case: split the double pole
    w = -z
    nu = a1 + a2 - b1 - b2 - b3 + 0.5
    sqw = cmath.sqrt(w)
    logw = cmath.log(w)
    # E(w e^{+-i pi}): kappa y^{1/kappa} = +-2i sqrt(w), kappa = 2
    pref_e = (2.0 * math.pi) ** -0.5 * cmath.exp(-(nu + 0.5) * math.log(2.0))
    phase = nu * cmath.log(2.0 * sqw)
    e_sum = pref_e * (cmath.exp(2j * sqw + phase + 0.5j * math.pi * nu)
                      + cmath.exp(-2j * sqw + phase - 0.5j * math.pi * nu))
    h = 0j
    for am, al in ((a1, a2), (a2, a1)):
        row = complex(_cgamma(complex(am))) * complex(_cgamma(complex(al - am)))
        row *= complex(_crgamma(complex(b1 - am))) * complex(_crgamma(complex(b2 - am))) \
            * complex(_crgamma(complex(b3 - am)))
        h += row * cmath.exp(-am * logw)
    front = (complex(_cgamma(complex(b1))) * complex(_cgamma(complex(b2)))
             * complex(_cgamma(complex(b3)))
             * complex(_crgamma(complex(a1))) * complex(_crgamma(complex(a2))))
    return front * (h + e_sum)


def hyp2f3(a1, a2, b1, b2, b3, z: complex,
           policy: EvalPolicy | None = None) -> complex:
    """2F3(a1, a2; b1, b2, b3; z) for complex parameters and argument."""
    policy = policy or HYP2F3_POLICY
    z = require_finite(complex(z))
    a1, a2 = complex(a1), complex(a2)
    b1, b2, b3 = complex(b1), complex(b2), complex(b3)
    _check_params((b1, b2, b3))
    if z == 0:
        return 1.0 + 0.0j
    r = abs(z)
    on_positive_axis = z.imag == 0.0 and z.real > 0.0
    if r > policy.asymptotic_switch_radius and not on_positive_axis:
        out = _asymptotic(a1, a2, b1, b2, b3, z)
        return check_result(out, f"hyp2f3(z={z!r})")
    # cancellation bound: max term ~ e^{2 sqrt|z|}, value ~ e^{2 Re sqrt z}
    sq = cmath.sqrt(z)
    extra = 0.88 * (math.sqrt(r) - max(sq.real, 0.0))
    if extra <= 2.0:
        out = _series_double(a1, a2, b1, b2, b3, z, policy.series_tol, policy.max_terms)
    else:
        out = _series_mp(a1, a2, b1, b2, b3, z, 20 + int(extra), policy.max_terms)
    return check_result(out, f"hyp2f3(z={z!r})")

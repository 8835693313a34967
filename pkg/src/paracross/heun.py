"""Tri-confluent Heun asymptotics and the numerically estimated Stokes limit.

The second canonical form U'' + (mu - xi^2/4 + nu z - (3/2) xi z^2
- (9/4) z^4) U = 0 has a recessive solution in |arg z| < pi/2 with the
(divergent) expansion

    T1(mu, nu, xi; z) = e^{-(z^3 + xi z)/2} z^{nu/3 - 1} Sum_k a_k z^{-k},

where a_0 = 1, a_1 = -mu/3, a_2 = (mu^2 + xi (nu - 3))/18 and the remaining
coefficients follow a four-term recursion.  The companion solution is the
reflection T2(mu, nu, xi; z) = T1(mu, -nu, xi; -z).  The Stokes multiplier
connecting the sectors carries the exact transition probability; it is not
computed in closed form here, only estimated as the numerically observed
limit |C1(infinity)| of the exact dynamics (with a Richardson-style
uncertainty), which the theory identifies with |A1 C(w^4 mu, -nu, w^2 xi)|.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .dynamics import TwoLevelState, integrate_coupled
from .errors import ConvergenceError
from .model import ModelParams, classify_regime, detuning_phase, heun_params


@dataclass(frozen=True)
class SeriesCoeffs:
    mu: complex
    nu: complex
    xi: complex
    a: np.ndarray   # a_0 .. a_K

    def recursion_residual(self) -> float:
        """Max absolute residual of the four-term recursion over stored terms."""
        mu, nu, xi, a = self.mu, self.nu, self.xi, self.a
        worst = 0.0
        for k in range(len(a) - 3):
            r = 3.0 * (k + 3) * a[k + 3] + mu * a[k + 2] \
                + xi * (k + 2 - nu / 3.0) * a[k + 1] \
                + (k + 1 - nu / 3.0) * (k + 2 - nu / 3.0) * a[k]
            worst = max(worst, abs(r))
        return worst


def series_coeffs(mu: complex, nu: complex, xi: complex, k_max: int) -> SeriesCoeffs:
    """Expansion coefficients a_0..a_{k_max} of the recessive solution."""
    if k_max < 0:
        raise ValueError("k_max must be >= 0")
    mu, nu, xi = complex(mu), complex(nu), complex(xi)
    a = np.zeros(k_max + 1, dtype=complex)
    a[0] = 1.0
    if k_max >= 1:
        a[1] = -mu / 3.0
    if k_max >= 2:
        a[2] = (mu * mu + xi * (nu - 3.0)) / 18.0
    for k in range(k_max - 2):
        a[k + 3] = -(mu * a[k + 2] + xi * (k + 2 - nu / 3.0) * a[k + 1]
                     + (k + 1 - nu / 3.0) * (k + 2 - nu / 3.0) * a[k]) / (3.0 * (k + 3))
    return SeriesCoeffs(mu=mu, nu=nu, xi=xi, a=a)


@dataclass(frozen=True)
class AsymptoticValue:
    value: complex
    dvalue: complex          # d/dz
    terms_used: int
    err_estimate: float      # absolute size of the first omitted term
    diverged: bool           # True when the series hit its divergence floor


def t1_eval(coeffs: SeriesCoeffs, z: complex) -> AsymptoticValue:
    """Evaluate T1 and dT1/dz at z by optimal truncation of the expansion.

    Meaningful for |arg z| < pi/2 and |z| large enough that the first terms
    decrease; the reported err_estimate is the absolute magnitude of the first
    omitted term times the exponential prefactor.
    """
    a = coeffs.a
    inv = 1.0 / z
    s = 0j
    ds = 0j
    zpow = 1.0 + 0j
    prev = math.inf
    used = 0
    diverged = False
    tail = 0.0
    for k, ak in enumerate(a):
        term = ak * zpow
        mag = abs(term)
        if mag > prev:
            diverged = True
            tail = mag
            break
        s += term
        ds += -k * term * inv
        prev = mag if mag > 0 else prev
        used = k + 1
        zpow *= inv
        tail = abs(a[used]) * abs(zpow) if used < len(a) else mag
    pref = cmath.exp(-0.5 * (z ** 3 + coeffs.xi * z))
    zfac = cmath.exp((coeffs.nu / 3.0 - 1.0) * cmath.log(z))
    value = pref * zfac * s
    dvalue = pref * (zfac * (-(1.5 * z * z + 0.5 * coeffs.xi) * s + ds)
                     + (coeffs.nu / 3.0 - 1.0) * zfac * inv * s)
    return AsymptoticValue(value=value, dvalue=dvalue, terms_used=used,
                           err_estimate=abs(pref * zfac) * tail, diverged=diverged)


def t2_eval(mu: complex, nu: complex, xi: complex, z: complex,
            k_max: int = 40) -> AsymptoticValue:
    """T2(mu, nu, xi; z) = T1(mu, -nu, xi; -z), for pi/2 < arg z < 3pi/2."""
    ref = t1_eval(series_coeffs(mu, -nu, xi, k_max), -z)
    return AsymptoticValue(value=ref.value, dvalue=-ref.dvalue,
                           terms_used=ref.terms_used,
                           err_estimate=ref.err_estimate, diverged=ref.diverged)


def u1_far_field(params: ModelParams, t: float, k_max: int = 30):
    """(U1, dU1/dt, abs err estimate) from the incoming-branch expansion at large -t.

    U1(t -> -inf) = A1 T1(mu, -nu, xi; |tau|/h) with A1 = (|f|/3)(beta/6)^{-1/3}.
    """
    hp = heun_params(params)
    tau = t + params.tau_offset
    if tau >= 0:
        raise ValueError("far-field seed defined on the incoming side tau < 0")
    x = -tau / hp.h
    a1 = (params.f_abs / 3.0) * (params.beta / 6.0) ** (-1.0 / 3.0)
    coeffs = series_coeffs(hp.mu, -hp.nu, hp.xi, k_max)
    ev = t1_eval(coeffs, x)
    dx_dt = -1.0 / hp.h
    return a1 * ev.value, a1 * ev.dvalue * dx_dt, a1 * ev.err_estimate


@dataclass(frozen=True)
class StokesEstimate:
    """Numeric limit |C1(inf)|, identified with |A1 C(w^4 mu, -nu, w^2 xi)|."""

    value: float
    uncertainty: float
    method: str = "numeric-limit"

    @property
    def probability(self) -> float:
        return self.value ** 2

    @property
    def probability_uncertainty(self) -> float:
        return 2.0 * self.value * self.uncertainty + self.uncertainty ** 2


def far_field_seed_state(params: ModelParams, t: float) -> TwoLevelState:
    """Normalized (C1, C2) built from the full incoming asymptotic series at t."""
    u1, u1dot, _ = u1_far_field(params, t)
    w = cmath.exp(-1j * (params.alpha * t * t / 4.0 + params.beta * t ** 3 / 12.0))
    c1 = u1 * w
    c1dot = (u1dot - 1j * (params.alpha * t / 2.0 + params.beta * t * t / 4.0) * u1) * w
    c2 = 1j * c1dot * cmath.exp(1j * detuning_phase(params, t)) / params.f
    n = math.sqrt(abs(c1) ** 2 + abs(c2) ** 2)
    return TwoLevelState(t=t, c1=c1 / n, c2=c2 / n)


def default_seed_time(params: ModelParams) -> float:
    """Incoming time far enough out that all dropped asymptotic terms are small."""
    t_star = classify_regime(params, 0.0).t_star
    mag = max(3.0 * t_star, 4.0)
    if params.beta != 0.0:
        mag = max(mag, 10.0 * abs(params.alpha / params.beta))
    if params.alpha != 0.0:
        mag = max(mag, 10.0 * params.f_abs / abs(params.alpha))
    return -mag


def stokes_estimate(params: ModelParams, t_max: float, tol: float = 1e-9,
                    seed: TwoLevelState | None = None,
                    window_fraction: float = 0.2,
                    window_points: int = 800) -> StokesEstimate:
    """Estimate lim |C1(t)| by exact integration with Richardson-style control.

    Integrates once from the asymptotic seed out to 4*t_max and reads the
    oscillation-averaged |C1| over trailing windows at t_max, 2 t_max and
    4 t_max; the spread of those readings sets the uncertainty.
    """
    if params.f == 0:
        return StokesEstimate(value=0.0, uncertainty=0.0)
    if seed is None:
        seed = far_field_seed_state(params, default_seed_time(params))
    if not t_max > 0:
        raise ValueError("t_max must be positive")
    t_marks = [t_max, 2.0 * t_max, 4.0 * t_max]
    grids = [np.linspace(tm * (1.0 - window_fraction), tm, window_points)
             for tm in t_marks]
    all_ts = np.concatenate(grids)
    traj = integrate_coupled(params, (seed.t, t_marks[-1]), seed, tol=tol,
                             samples=all_ts)
    p1 = traj.p1
    xs = [math.sqrt(float(np.mean(p1[i * window_points:(i + 1) * window_points])))
          for i in range(3)]
    d1 = xs[1] - xs[0]
    d2 = xs[2] - xs[1]
    if abs(d2) > 2.0 * abs(d1) + 10.0 * tol:
        raise ConvergenceError(
            f"|C1| readings {xs} do not converge with growing t_max")
    value = xs[2]
    if abs(d1) > 0 and abs(d2) < abs(d1):
        r = d2 / d1
        value = xs[2] + d2 * r / (1.0 - r)
    unc = max(abs(d2), abs(value - xs[2])) * 1.5 + 10.0 * tol
    return StokesEstimate(value=max(value, 0.0), uncertainty=unc)

"""Exact numerical oracle for the two-level dynamics.

Two equivalent formulations are integrated with the adaptive Dormand-Prince
scheme in ``_rk``:

* the coupled first-order amplitudes (C1, C2) in the interaction picture,
  i C1' = f e^{-i Phi} C2,  i C2' = f* e^{+i Phi} C1,  Phi(t) = integral of the
  detuning, with |C1|^2 + |C2|^2 conserved;
* the Schroedinger-form second-order amplitude U1'' + J(t) U1 = 0 with
  J(t) = |f|^2 - i alpha/2 - i beta t/2 + alpha^2 t^2/4 + alpha beta t^3/4
  + beta^2 t^4/16 (valid for beta = 0 as well, where it reduces to the
  linear-chirp Weber form).

They are related by C1 = U1 exp(-i(alpha t^2/4 + beta t^3/12)) and share the
modulus |C1| = |U1|.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import _rk
from .model import ModelParams, classify_regime, detuning_phase

DEFAULT_TOL = 1e-10


@dataclass(frozen=True)
class TwoLevelState:
    t: float
    c1: complex
    c2: complex

    @property
    def norm(self) -> float:
        return abs(self.c1) ** 2 + abs(self.c2) ** 2


@dataclass(frozen=True)
class U1State:
    t: float
    u1: complex
    u1dot: complex


@dataclass
class Trajectory:
    """Sampled solution with cubic-Hermite interpolation between samples.

    ``ys``/``dys`` hold the two state components and their derivatives at
    ``ts`` (strictly monotone).  ``labels`` names the components: ("c1", "c2")
    for the coupled system, ("u1", "u1dot") for the second-order form.
    """

    ts: np.ndarray
    ys: np.ndarray
    dys: np.ndarray
    labels: tuple[str, str]
    tol: float
    n_accepted: int
    n_rejected: int
    norm_drift_max: float | None = None

    @property
    def p1(self) -> np.ndarray:
        return np.abs(self.ys[:, 0]) ** 2

    @property
    def p2(self) -> np.ndarray:
        return np.abs(self.ys[:, 1]) ** 2

    def state_at(self, t: float) -> tuple[complex, complex]:
        ts = self.ts
        ascending = ts[-1] >= ts[0]
        tq = t if ascending else -t
        grid = ts if ascending else -ts
        i = int(np.searchsorted(grid, tq))
        i = min(max(i, 1), len(ts) - 1)
        return _rk._hermite(t, ts[i - 1], self.ys[i - 1], self.dys[i - 1],
                            ts[i], self.ys[i], self.dys[i])

    def to_csv(self, path) -> None:
        """Write the fixed trajectory schema (17 significant digits)."""
        with open(path, "w") as fh:
            fh.write("t,re_c1,im_c1,re_c2,im_c2,p1,p2\n")
            for t, (y1, y2) in zip(self.ts, self.ys):
                fh.write("%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n"
                         % (t, y1.real, y1.imag, y2.real, y2.imag,
                            abs(y1) ** 2, abs(y2) ** 2))


def _sample_grid(t_span, samples) -> np.ndarray:
    t0, t1 = float(t_span[0]), float(t_span[1])
    if samples is None:
        return np.array([t0, t1])
    if np.isscalar(samples):
        return np.linspace(t0, t1, int(samples))
    arr = np.asarray(samples, dtype=float)
    return arr


def _run(rhs, t_span, y0, tol, samples, track_norm, labels) -> Trajectory:
    grid = _sample_grid(t_span, samples)
    ys, y_end, f_end, stats = _rk.integrate(rhs, float(t_span[0]), float(t_span[1]),
                                            y0, tol, sample_ts=grid,
                                            track_norm=track_norm)
    dys = np.empty_like(ys)
    for i, t in enumerate(grid):
        dys[i] = rhs(t, ys[i, 0], ys[i, 1])
    return Trajectory(ts=grid, ys=ys, dys=dys, labels=labels, tol=tol,
                      n_accepted=stats["n_accepted"], n_rejected=stats["n_rejected"],
                      norm_drift_max=stats["norm_drift_max"])


def coupled_rhs(params: ModelParams):
    """Right-hand side of the interaction-picture amplitude equations."""
    f = complex(params.f)
    fc = f.conjugate()
    a2 = 0.5 * params.alpha
    b6 = params.beta / 6.0
    cexp = cmath.exp

    def rhs(t, c1, c2):
        phi = t * t * (a2 + b6 * t)
        e = cexp(-1j * phi)
        return -1j * f * e * c2, -1j * fc * c1 / e

    return rhs


def u1_rhs(params: ModelParams):
    """Right-hand side of the Schroedinger-form pair (U1, U1')."""
    c0 = params.f_abs ** 2 - 0.5j * params.alpha
    c1 = -0.5j * params.beta
    c2 = 0.25 * params.alpha ** 2
    c3 = 0.25 * params.alpha * params.beta
    c4 = params.beta ** 2 / 16.0

    def rhs(t, u, v):
        j = c0 + t * (c1 + t * (c2 + t * (c3 + t * c4)))
        return v, -j * u

    return rhs


def integrate_coupled(params: ModelParams, t_span, init: TwoLevelState,
                      tol: float = DEFAULT_TOL, samples=None) -> Trajectory:
    """Integrate (C1, C2) over t_span starting from ``init`` (must sit at t_span[0]).

    Normalization drift over the run stays below ~100*tol and is recorded in
    ``norm_drift_max``.
    """
    if abs(init.norm - 1.0) > 1e-6:
        raise ValueError(f"initial state not normalized: |C|^2 = {init.norm!r}")
    if init.t != t_span[0]:
        raise ValueError("init.t must equal t_span[0]")
    return _run(coupled_rhs(params), t_span, (init.c1, init.c2), tol, samples,
                True, ("c1", "c2"))


def integrate_u1(params: ModelParams, t_span, init: U1State,
                 tol: float = DEFAULT_TOL, samples=None) -> Trajectory:
    """Integrate the second-order amplitude (U1, U1') over t_span."""
    if init.t != t_span[0]:
        raise ValueError("init.t must equal t_span[0]")
    return _run(u1_rhs(params), t_span, (init.u1, init.u1dot), tol, samples,
                False, ("u1", "u1dot"))


def asymptotic_seed(params: ModelParams, t: float) -> tuple[complex, complex]:
    """Leading-order incoming amplitude (C1, C1') at large negative t.

    C1 ~ A1 (beta/6)^{-2/3} e^{-i(beta t^3/6 + alpha t^2/2 - alpha^3/(6 beta^2)
    - pi/3)} t^{-2} with A1 = (|f|/3)(beta/6)^{-1/3}, so |C1'| = |f| exactly.
    """
    if params.beta <= 0.0:
        raise ValueError("asymptotic seed is defined for beta > 0")
    tag = classify_regime(params, t)
    if t >= 0 or abs(t) <= 3.0 * tag.t_star:
        raise ValueError(
            f"t = {t!r} is not in the asymptotic regime (need t < -3 t* = "
            f"{-3.0 * tag.t_star!r})")
    b6 = params.beta / 6.0
    a1 = (params.f_abs / 3.0) * b6 ** (-1.0 / 3.0)
    phase = cmath.exp(-1j * (params.beta * t ** 3 / 6.0 + params.alpha * t * t / 2.0
                             - params.alpha ** 3 / (6.0 * params.beta ** 2)
                             - math.pi / 3.0))
    c1 = a1 * b6 ** (-2.0 / 3.0) * phase / (t * t)
    c1dot = -3j * b6 ** (1.0 / 3.0) * a1 * phase
    return c1, c1dot


def seed_state(params: ModelParams, t: float) -> TwoLevelState:
    """Normalized TwoLevelState built from the asymptotic seed at t."""
    c1, c1dot = asymptotic_seed(params, t)
    if params.f == 0:
        return TwoLevelState(t=t, c1=0.0j, c2=1.0 + 0.0j)
    c2 = 1j * c1dot * cmath.exp(1j * detuning_phase(params, t)) / params.f
    n = math.sqrt(abs(c1) ** 2 + abs(c2) ** 2)
    return TwoLevelState(t=t, c1=c1 / n, c2=c2 / n)


@dataclass(frozen=True)
class TailAsymptote:
    """Direct-integration large-|t| amplitudes and their population ratio."""

    c1: complex
    c2: complex
    ratio_limit: float     # |C2(+inf)| / |C2(-inf)|
    caveat: bool           # True when the form is known not to reproduce the
                           # exact transition probability (parabolic case)


def appendix_tail(params: ModelParams, model: str, t: float) -> TailAsymptote:
    """Large-|t| direct-integration asymptotes of (C1, C2), unit integration constant.

    ``model`` is "linear" (gives the ratio e^{-pi gamma}) or "parabolic"
    (ratio 1, flagged as inconsistent with the exact transition probability).
    """
    if model not in ("linear", "parabolic"):
        raise ValueError("model must be 'linear' or 'parabolic'")
    if params.alpha == 0.0:
        raise ValueError("the direct-integration tails need alpha != 0")
    gamma = params.f_abs ** 2 / params.alpha
    tc = complex(t)
    f = params.f if params.f != 0 else 1.0
    if model == "linear":
        power = cmath.exp(-1j * gamma * cmath.log(tc))
        c1 = cmath.exp(-0.5j * params.alpha * t * t) / (1j * params.alpha * tc) * power
        c2 = -1j * power / f
        return TailAsymptote(c1=c1, c2=c2, ratio_limit=math.exp(-math.pi * gamma),
                             caveat=False)
    if params.beta == 0.0:
        raise ValueError("parabolic tail needs beta != 0")
    ratio_arg = tc / (tc + 2.0 * params.alpha / params.beta)
    power = cmath.exp(-1j * gamma * cmath.log(ratio_arg))
    denom = 1j * (params.alpha * t + 0.5 * params.beta * t * t)
    c1 = cmath.exp(-1j * (0.5 * params.alpha * t * t + params.beta * t ** 3 / 6.0)) \
        / denom * power
    c2 = -1j * power / f
    return TailAsymptote(c1=c1, c2=c2, ratio_limit=1.0, caveat=True)
